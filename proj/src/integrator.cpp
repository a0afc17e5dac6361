#include "veckin/integrator.hpp"

#include <cmath>
#include <string>

#include "veckin/diagnostics.hpp"
#include "veckin/kernels.hpp"

namespace veckin {

double compute_dt(const StepConfig& config, const Grid& grid, double lambda, double t) {
  if (!(lambda > 0.0)) throw domain_error("compute_dt: lambda must be positive");
  const double dt_cfl = config.cfl * grid.min_dx() / lambda;
  return std::min(dt_cfl, config.t_end - t);
}

namespace {

void combine(KineticField& out, double a, const KineticField& xa, double b,
             const KineticField& xb, double c, const KineticField& xc) {
  const auto& ops = kernels::active();
  const int M = out.M();
  for (int m = 0; m < M; ++m) {
    const long n = out.f[m].plane_size();
    for (int cc = 0; cc < out.f[m].comps(); ++cc)
      ops.triad(a, xa.f[m].plane(cc), b, xb.f[m].plane(cc), c, xc.f[m].plane(cc),
                out.f[m].plane(cc), std::size_t(n));
  }
}

void check_state(const RunState& s, const ModelSpec& model) {
  const Grid& g = s.u.grid();
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix) {
      for (int c = 0; c < model.p; ++c) {
        const double v = s.u.at(c, ix, iy);
        if (!std::isfinite(v))
          throw blowup_error("non-finite state at step " + std::to_string(s.step) +
                             ", t=" + std::to_string(s.t) + ", cell (" +
                             std::to_string(ix) + "," + std::to_string(iy) + ")");
      }
      if (model.is_shallow_water() && !(s.u.at(0, ix, iy) > 0.0))
        throw blowup_error("nonpositive depth at step " + std::to_string(s.step) +
                           ", t=" + std::to_string(s.t) + ", cell (" +
                           std::to_string(ix) + "," + std::to_string(iy) + ")");
    }
}

}  // namespace

void ssprk3_step(RunState& state, double dt, const ModelSpec& model,
                 const StepConfig& config, const Field* frozen, DerivedPlanes& planes,
                 KineticField& rhs, KineticField& stage) {
  if (!(dt > 0.0)) throw domain_error("ssprk3_step: dt must be positive");
  KineticField& kin = state.kin;

  // stage 1: F1 = F + dt L(F)
  compute_rhs(model, state.vset, state.u, config.scheme, planes, rhs);
  combine(stage, 1.0, kin, dt, rhs, 0.0, rhs);
  moments_into(stage, state.u);
  apply_bc_inplace(state.u, config.bc, frozen);

  // stage 2: F2 = 3/4 F + 1/4 (F1 + dt L(F1))
  compute_rhs(model, state.vset, state.u, config.scheme, planes, rhs);
  combine(stage, 0.75, kin, 0.25, stage, 0.25 * dt, rhs);
  moments_into(stage, state.u);
  apply_bc_inplace(state.u, config.bc, frozen);

  // stage 3: F+ = 1/3 F + 2/3 (F2 + dt L(F2))
  compute_rhs(model, state.vset, state.u, config.scheme, planes, rhs);
  combine(kin, 1.0 / 3.0, kin, 2.0 / 3.0, stage, (2.0 / 3.0) * dt, rhs);
  moments_into(kin, state.u);
  apply_bc_inplace(state.u, config.bc, frozen);

  state.t += dt;
  state.step += 1;
  check_state(state, model);
}

RunResult run(const ModelSpec& model, const Grid& grid, const Field& initial_interior,
              const Field& initial_with_ghosts, const StepConfig& config) {
  if (!(config.t_end >= 0.0)) throw domain_error("run: t_end must be nonnegative");
  if (!(config.cfl > 0.0 && config.cfl <= 1.0))
    throw domain_error("run: CFL must lie in (0, 1]");

  RunState state;
  state.u = initial_with_ghosts;
  // interior from the dedicated interior field (identical by construction, but
  // keeps the two-argument contract honest)
  for (int c = 0; c < model.p; ++c)
    for (int iy = 0; iy < grid.ny(); ++iy)
      for (int ix = 0; ix < grid.n[0]; ++ix)
        state.u.at(c, ix, iy) = initial_interior.at(c, ix, iy);

  const Field* frozen =
      config.bc == BoundaryKind::FixedFromInitial ? &initial_with_ghosts : nullptr;
  apply_bc_inplace(state.u, config.bc, frozen);

  double lambda = lambda_bound(model, state.u, config.lambda_safety);
  state.vset = build_velocity_set(model.D, lambda);
  state.kin = make_kinetic_field(grid, state.vset.M, model.p);
  maxwellian_field(model, state.vset, state.u, state.kin);

  DerivedPlanes planes = make_planes(model, state.vset, grid);
  KineticField rhs = make_kinetic_field(grid, state.vset.M, model.p);
  KineticField stage = make_kinetic_field(grid, state.vset.M, model.p);

  RunResult result;
  result.report.M = state.vset.M;
  EntropyTracker tracker(model, grid);
  if (config.record_entropy)
    result.report.samples.push_back(tracker.sample(state, model));

  try {
    while (state.t < config.t_end - 1e-14 * std::max(1.0, config.t_end)) {
      if (config.lambda_policy == LambdaPolicy::PerStep && state.step > 0) {
        const double lam_new = lambda_bound(model, state.u, config.lambda_safety);
        if (lam_new != state.vset.lambda) {
          state.vset = build_velocity_set(model.D, lam_new);
          maxwellian_field(model, state.vset, state.u, state.kin);
        }
      }
      const double dt = compute_dt(config, grid, state.vset.lambda, state.t);
      ssprk3_step(state, dt, model, config, frozen, planes, rhs, stage);
      if (config.record_entropy)
        result.report.samples.push_back(tracker.sample(state, model));
    }
  } catch (const blowup_error& e) {
    result.aborted = true;
    result.abort_reason = e.what();
  } catch (const positivity_error& e) {
    result.aborted = true;
    result.abort_reason = e.what();
  } catch (const numerical_error& e) {
    result.aborted = true;
    result.abort_reason = e.what();
  }
  result.state = std::move(state);
  return result;
}

}  // namespace veckin
