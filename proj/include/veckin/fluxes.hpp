#pragma once

#include "veckin/kinetic.hpp"

namespace veckin {

enum class SchemeKind { EC, ES1, ES2, ES2Limited };

const char* scheme_name(SchemeKind s);
SchemeKind scheme_from_name(const std::string& s);

// Everything one interface flux evaluation needs. Jumps are entropy-variable
// jumps at i_d-1/2, i_d+1/2, i_d+3/2 (only the middle one is used below first
// order; the neighbors feed the second-order reconstruction).
struct FluxRequest {
  int d = 0;
  int m = 0;
  Vec UL{}, UR{};
  Vec VL{}, VR{};
  Vec jump_prev{}, jump_cur{}, jump_next{};
  Pos x{0.0, 0.0};
};

// minmod per the benchmark definition; sign(0) matches nothing.
double minmod(double a, double b);

// Kinetic EC flux for scalar laws: [[chi_m^(d)]]/[[V]], central average at ties.
double ec_flux_scalar(const ModelSpec& model, const VelocitySet& vset,
                      const FluxRequest& req);

// Kinetic EC flux for shallow water from arithmetic averages of (rho, u, rho^2).
Vec ec_flux_sw(const VelocitySet& vset, const FluxRequest& req, int p);

// First-order entropy-stable dissipation term (1/(2M)) R Lambda R^T [[V]],
// with R, Lambda at the arithmetic-average state (scalar: R = 1).
Vec es_dissipation_first(const ModelSpec& model, const VelocitySet& vset,
                         const FluxRequest& req);

// Minmod-limited characteristic reconstruction of the scaled jump; all three
// jumps are projected through the single interface basis R^T.
Vec reconstruct_scaled_jump(const Mat& R, const Vec& jump_prev, const Vec& jump_cur,
                            const Vec& jump_next, int p);

// Interface flux for one (m, d): EC kernel minus the scheme's dissipation.
Vec interface_flux(SchemeKind scheme, const ModelSpec& model, const VelocitySet& vset,
                   const FluxRequest& req);

// ---- bulk sweeps ----------------------------------------------------------

// Per-cell planes derived from U (ghosts included) that the flux kernels read.
struct DerivedPlanes {
  Field data;
  // shallow water: rho, u1[, u2], rho2, V1 (V2/V3 are the u planes)
  // scalar: V, then chi_m and v_m F_m for each velocity's own direction
  int i_rho = 0, i_u1 = 1, i_u2 = 2, i_r2 = 0, i_v1 = 0;
  int i_v = 0, i_chi0 = 0, i_vf0 = 0;
};

void precompute_planes(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                       DerivedPlanes& planes);
DerivedPlanes make_planes(const ModelSpec& model, const VelocitySet& vset, const Grid& g);

// rhs_m = -sum_d (flux_{i_d+1/2} - flux_{i_d-1/2}) / dx_d for every velocity.
// U must have its ghost frame filled.
void compute_rhs(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                 SchemeKind scheme, DerivedPlanes& planes, KineticField& rhs);

// Spec-shaped wrapper: ghosts of kf must be filled.
KineticField semi_discrete_rhs(const ModelSpec& model, const VelocitySet& vset,
                               const KineticField& kf, SchemeKind scheme);

}  // namespace veckin
