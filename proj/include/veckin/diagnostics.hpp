#pragma once

#include <span>

#include "veckin/diagnostics_types.hpp"
#include "veckin/fluxes.hpp"

namespace veckin {

struct RunState;

// Signed error = sum(curr - prev)/N; absolute error = sum|curr - prev|/N.
// The signed form allows spatial cancellation, the absolute form does not.
double signed_error(std::span<const double> curr, std::span<const double> prev);
double absolute_error(std::span<const double> curr, std::span<const double> prev);

// Per-step entropy bookkeeping: keeps the previous per-cell entropy planes so
// the per-step errors are sums of per-cell differences.
class EntropyTracker {
 public:
  EntropyTracker(const ModelSpec& model, const Grid& grid);
  EntropySample sample(const RunState& state, const ModelSpec& model);

 private:
  Grid grid_;
  int M_ = 0;
  bool have_prev_ = false;
  std::vector<double> eta_, eta_prev_;
  std::array<std::vector<double>, 4> h_, h_prev_;
};

// Volume-weighted L2 error per component: sqrt(sum err^2 * prod dx).
std::array<double, 3> l2_error(const Field& field, const Field& reference);
// Discrete 2-norm divided by total cell count: sqrt(sum err^2)/N.
std::array<double, 3> l2_error_scaled(const Field& field, const Field& reference);

// Conservative restriction: each coarse value is the mean of the fine cells
// covering it (grids must nest with an integer ratio).
Field restrict_field(const Field& fine, const Grid& coarse);

struct EocRow {
  long n_cells = 0;
  double dx = 0.0;
  std::array<double, 3> l2{};
  std::array<double, 3> order{};  // NaN on the first row
  int comps = 1;
};
using EocTable = std::vector<EocRow>;

// order_k = log(e_{k-1}/e_k) / log(dx_{k-1}/dx_k); needs >= 2 rows.
EocTable eoc(const std::vector<EocRow>& rows);

// Max over interfaces and velocities of |<[[V]], flux>| - [[chi_m]]| for the
// EC fluxes along direction d of the given field.
double ec_residual_audit(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                         int d);

// Residual of the per-cell semi-discrete entropy equality for the EC scheme:
// max over interior cells and velocities of
//   |V_i . L_m,i + ((vH)*_{i+1/2} - (vH)*_{i-1/2})/dx|
// with the consistent interface numerical entropy flux.
double entropy_equality_residual(const ModelSpec& model, const VelocitySet& vset,
                                 const Field& u, int d);

// Interior sum of each component times the cell volume (fixed summation order).
std::array<double, 3> conserved_totals(const Field& u);

}  // namespace veckin
