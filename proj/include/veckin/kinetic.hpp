#pragma once

#include <vector>

#include "veckin/grid.hpp"
#include "veckin/models.hpp"

namespace veckin {

// Discrete velocity set: M = 2 (1D) or 4 (2D), speeds +-lambda on the axes.
struct VelocitySet {
  int M = 2;
  int D = 1;
  double lambda = 1.0;
  std::array<std::array<double, 2>, 4> v{};  // v[m][d]
  std::array<double, 4> a{};
  std::array<std::array<double, 2>, 4> b{};  // b[m][d]

  // velocities with v[m][d] != 0; the only ones carrying flux along d
  bool active(int m, int d) const { return v[m][d] != 0.0; }
};

VelocitySet build_velocity_set(int D, double lambda);

// lambda = max(safety * (D==1 ? 1 : 2) * sup_cells max_wave_speed, floor).
double lambda_bound(const ModelSpec& model, const Field& field, double safety);

// Maxwellian decomposition F_m = a_m U + sum_d b_m^(d) G^(d)(U, x).
std::array<Vec, 4> maxwellian(const ModelSpec& model, const VelocitySet& vset,
                              const Vec& u, const Pos& x);

// Kinetic entropies H_m = a_m eta + sum_d b_m^(d) omega^(d).
std::array<double, 4> kinetic_entropy(const ModelSpec& model, const VelocitySet& vset,
                                      const Vec& u, const Pos& x);

// Kinetic entropy flux potentials chi_m^(d) = V . v_m^(d) F_m - v_m^(d) H_m.
std::array<std::array<double, 2>, 4> chi_potential(const ModelSpec& model,
                                                   const VelocitySet& vset, const Vec& u,
                                                   const Pos& x);

// One field per discrete velocity; sum of components recovers U.
struct KineticField {
  std::vector<Field> f;  // size M

  int M() const { return int(f.size()); }
};

KineticField make_kinetic_field(const Grid& g, int M, int p);

// Componentwise sum over velocities: U = sum_m F_m (ghosts included).
Field moments(const KineticField& kf);
void moments_into(const KineticField& kf, Field& u);

// Fills kf with the Maxwellian of every cell (ghosts included).
void maxwellian_field(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                      KineticField& kf);

}  // namespace veckin
