#pragma once

#include "veckin/diagnostics_types.hpp"
#include "veckin/fluxes.hpp"

namespace veckin {

enum class LambdaPolicy { PerStep, Frozen };

struct StepConfig {
  double cfl = 0.5;
  SchemeKind scheme = SchemeKind::EC;
  LambdaPolicy lambda_policy = LambdaPolicy::PerStep;
  double lambda_safety = 1.5;
  double t_end = 0.0;
  BoundaryKind bc = BoundaryKind::Periodic;
  bool record_entropy = true;
};

struct RunState {
  double t = 0.0;
  long step = 0;
  Field u;          // ghosts kept consistent with bc
  KineticField kin; // prognostic F_m
  VelocitySet vset;
};

double compute_dt(const StepConfig& config, const Grid& grid, double lambda, double t);

// One SSPRK(3,3) step in Shu-Osher form. After every stage U is recombined
// from the kinetic fields and the ghost frame is refreshed.
void ssprk3_step(RunState& state, double dt, const ModelSpec& model,
                 const StepConfig& config, const Field* frozen, DerivedPlanes& planes,
                 KineticField& rhs, KineticField& stage);

// Generic Shu-Osher driver for the temporal-order tests: state vector `y`,
// rhs(y, dydt).
template <class VecT, class Rhs>
void ssprk3_generic(VecT& y, double dt, Rhs&& rhs, VecT& y1, VecT& y2, VecT& dy) {
  const std::size_t n = y.size();
  rhs(y, dy);
  for (std::size_t i = 0; i < n; ++i) y1[i] = y[i] + dt * dy[i];
  rhs(y1, dy);
  for (std::size_t i = 0; i < n; ++i) y2[i] = 0.75 * y[i] + 0.25 * (y1[i] + dt * dy[i]);
  rhs(y2, dy);
  for (std::size_t i = 0; i < n; ++i)
    y[i] = y[i] / 3.0 + (2.0 / 3.0) * (y2[i] + dt * dy[i]);
}

struct RunResult {
  RunState state;
  EntropyReport report;
  bool aborted = false;        // blow-up or positivity loss; report is partial
  std::string abort_reason;
};

// Integrates the initial field from t=0 to config.t_end, sampling entropy
// diagnostics after every accepted step.
RunResult run(const ModelSpec& model, const Grid& grid, const Field& initial_interior,
              const Field& initial_with_ghosts, const StepConfig& config);

}  // namespace veckin
