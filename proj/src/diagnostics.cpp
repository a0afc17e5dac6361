#include "veckin/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "veckin/integrator.hpp"

namespace veckin {

double signed_error(std::span<const double> curr, std::span<const double> prev) {
  if (curr.size() != prev.size()) throw shape_error("signed_error: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < curr.size(); ++i) s += curr[i] - prev[i];
  return s / double(curr.size());
}

double absolute_error(std::span<const double> curr, std::span<const double> prev) {
  if (curr.size() != prev.size()) throw shape_error("absolute_error: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < curr.size(); ++i) s += std::fabs(curr[i] - prev[i]);
  return s / double(curr.size());
}

EntropyTracker::EntropyTracker(const ModelSpec& model, const Grid& grid) : grid_(grid) {
  M_ = model.D == 1 ? 2 : 4;
  const std::size_t n = std::size_t(grid.cells());
  eta_.assign(n, 0.0);
  eta_prev_.assign(n, 0.0);
  for (int m = 0; m < M_; ++m) {
    h_[m].assign(n, 0.0);
    h_prev_[m].assign(n, 0.0);
  }
}

EntropySample EntropyTracker::sample(const RunState& state, const ModelSpec& model) {
  const Grid& g = grid_;
  std::size_t k = 0;
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix, ++k) {
      const Pos x{g.center(0, ix), g.dim == 2 ? g.center(1, iy) : 0.0};
      const Vec u = state.u.state(ix, iy);
      eta_[k] = model.entropy(u);
      const auto hm = kinetic_entropy(model, state.vset, u, x);
      for (int m = 0; m < M_; ++m) h_[m][k] = hm[m];
    }

  EntropySample s;
  s.t = state.t;
  const double n = double(eta_.size());
  double acc = 0.0;
  for (double v : eta_) acc += v;
  s.eta_mean = acc / n;
  for (int m = 0; m < M_; ++m) {
    acc = 0.0;
    for (double v : h_[m]) acc += v;
    s.h_mean[m] = acc / n;
  }
  if (have_prev_) {
    s.eta_signed = signed_error(eta_, eta_prev_);
    s.eta_abs = absolute_error(eta_, eta_prev_);
    for (int m = 0; m < M_; ++m) {
      s.h_signed[m] = signed_error(h_[m], h_prev_[m]);
      s.h_abs[m] = absolute_error(h_[m], h_prev_[m]);
    }
  }
  std::swap(eta_, eta_prev_);
  for (int m = 0; m < M_; ++m) std::swap(h_[m], h_prev_[m]);
  have_prev_ = true;
  return s;
}

namespace {

void check_same_shape(const Field& a, const Field& b, const char* who) {
  if (!(a.grid() == b.grid()) || a.comps() != b.comps()) throw shape_error(who);
}

}  // namespace

std::array<double, 3> l2_error(const Field& field, const Field& reference) {
  check_same_shape(field, reference, "l2_error: shape mismatch");
  const Grid& g = field.grid();
  std::array<double, 3> out{0, 0, 0};
  for (int c = 0; c < field.comps(); ++c) {
    double s = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy)
      for (int ix = 0; ix < g.n[0]; ++ix) {
        const double e = field.at(c, ix, iy) - reference.at(c, ix, iy);
        s += e * e;
      }
    out[c] = std::sqrt(s * g.cell_volume());
  }
  return out;
}

std::array<double, 3> l2_error_scaled(const Field& field, const Field& reference) {
  check_same_shape(field, reference, "l2_error_scaled: shape mismatch");
  const Grid& g = field.grid();
  std::array<double, 3> out{0, 0, 0};
  for (int c = 0; c < field.comps(); ++c) {
    double s = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy)
      for (int ix = 0; ix < g.n[0]; ++ix) {
        const double e = field.at(c, ix, iy) - reference.at(c, ix, iy);
        s += e * e;
      }
    out[c] = std::sqrt(s) / double(g.cells());
  }
  return out;
}

Field restrict_field(const Field& fine, const Grid& coarse) {
  const Grid& gf = fine.grid();
  if (gf.dim != coarse.dim) throw shape_error("restrict_field: dimension mismatch");
  if (gf.n[0] % coarse.n[0] != 0) throw shape_error("restrict_field: grids do not nest");
  const int r = gf.n[0] / coarse.n[0];
  if (gf.dim == 2 && (gf.n[1] != coarse.n[1] * r))
    throw shape_error("restrict_field: grids do not nest");
  Field out(coarse, fine.comps());
  const double w = gf.dim == 2 ? 1.0 / double(r * r) : 1.0 / double(r);
  for (int c = 0; c < fine.comps(); ++c)
    for (int iy = 0; iy < coarse.ny(); ++iy)
      for (int ix = 0; ix < coarse.n[0]; ++ix) {
        double s = 0.0;
        if (gf.dim == 2) {
          for (int jy = 0; jy < r; ++jy)
            for (int jx = 0; jx < r; ++jx) s += fine.at(c, ix * r + jx, iy * r + jy);
        } else {
          for (int jx = 0; jx < r; ++jx) s += fine.at(c, ix * r + jx, 0);
        }
        out.at(c, ix, iy) = s * w;
      }
  return out;
}

EocTable eoc(const std::vector<EocRow>& rows) {
  if (rows.size() < 2) throw domain_error("eoc: need at least 2 rows");
  EocTable t = rows;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (int c = 0; c < 3; ++c) t[i].order[c] = nan;
    if (i > 0) {
      if (!(t[i].dx < t[i - 1].dx)) throw domain_error("eoc: dx must strictly decrease");
      for (int c = 0; c < t[i].comps; ++c)
        t[i].order[c] =
            std::log(t[i - 1].l2[c] / t[i].l2[c]) / std::log(t[i - 1].dx / t[i].dx);
    }
  }
  return t;
}

namespace {

FluxRequest make_request(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                         int d, int m, int ix, int iy) {
  (void)vset;
  const Grid& g = u.grid();
  FluxRequest req;
  req.d = d;
  req.m = m;
  const int lx = d == 0 ? ix - 1 : ix;
  const int ly = d == 0 ? iy : iy - 1;
  req.UL = u.state(lx, ly);
  req.UR = u.state(ix, iy);
  req.VL = model.entropy_variable(req.UL);
  req.VR = model.entropy_variable(req.UR);
  const Vec vll = model.entropy_variable(u.state(d == 0 ? ix - 2 : ix, d == 0 ? iy : iy - 2));
  const Vec vrr = model.entropy_variable(u.state(d == 0 ? ix + 1 : ix, d == 0 ? iy : iy + 1));
  for (int c = 0; c < model.p; ++c) {
    req.jump_prev[c] = req.VL[c] - vll[c];
    req.jump_cur[c] = req.VR[c] - req.VL[c];
    req.jump_next[c] = vrr[c] - req.VR[c];
  }
  if (d == 0)
    req.x = {g.lo[0] + ix * g.dx(0), g.dim == 2 ? g.center(1, iy) : 0.0};
  else
    req.x = {g.center(0, ix), g.lo[1] + iy * g.dx(1)};
  return req;
}

}  // namespace

double ec_residual_audit(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                         int d) {
  const Grid& g = u.grid();
  double worst = 0.0;
  const int x0 = d == 0 ? 0 : 0, x1 = d == 0 ? g.n[0] + 1 : g.n[0];
  const int y0 = d == 1 ? 0 : 0, y1 = d == 1 ? g.ny() + 1 : g.ny();
  for (int iy = y0; iy < y1; ++iy)
    for (int ix = x0; ix < x1; ++ix)
      for (int m = 0; m < vset.M; ++m) {
        if (!vset.active(m, d)) continue;
        FluxRequest req = make_request(model, vset, u, d, m, ix, iy);
        Vec flux;
        if (model.is_scalar())
          flux = Vec{ec_flux_scalar(model, vset, req), 0, 0};
        else
          flux = ec_flux_sw(vset, req, model.p);
        const double chi_l = chi_potential(model, vset, req.UL, req.x)[m][d];
        const double chi_r = chi_potential(model, vset, req.UR, req.x)[m][d];
        const double res =
            std::fabs(dot(req.jump_cur, flux, model.p) - (chi_r - chi_l));
        worst = std::max(worst, res);
      }
  return worst;
}

double entropy_equality_residual(const ModelSpec& model, const VelocitySet& vset,
                                 const Field& u, int d) {
  const Grid& g = u.grid();
  const double invdx = 1.0 / g.dx(d);
  double worst = 0.0;
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix)
      for (int m = 0; m < vset.M; ++m) {
        if (!vset.active(m, d)) continue;
        const int rx = d == 0 ? ix + 1 : ix;
        const int ry = d == 0 ? iy : iy + 1;
        FluxRequest lo = make_request(model, vset, u, d, m, ix, iy);
        FluxRequest hi = make_request(model, vset, u, d, m, rx, ry);
        Vec flo, fhi;
        if (model.is_scalar()) {
          flo = Vec{ec_flux_scalar(model, vset, lo), 0, 0};
          fhi = Vec{ec_flux_scalar(model, vset, hi), 0, 0};
        } else {
          flo = ec_flux_sw(vset, lo, model.p);
          fhi = ec_flux_sw(vset, hi, model.p);
        }
        // interface numerical entropy flux consistent with chi
        auto ent_flux = [&](const FluxRequest& req, const Vec& f) {
          Vec vsum{0, 0, 0};
          for (int c = 0; c < model.p; ++c) vsum[c] = 0.5 * (req.VL[c] + req.VR[c]);
          const double chi_l = chi_potential(model, vset, req.UL, req.x)[m][d];
          const double chi_r = chi_potential(model, vset, req.UR, req.x)[m][d];
          return dot(vsum, f, model.p) - 0.5 * (chi_l + chi_r);
        };
        const Vec vi = model.entropy_variable(u.state(ix, iy));
        Vec lm{0, 0, 0};
        for (int c = 0; c < model.p; ++c) lm[c] = -(fhi[c] - flo[c]) * invdx;
        const double dhdt = dot(vi, lm, model.p);
        const double rhs = -(ent_flux(hi, fhi) - ent_flux(lo, flo)) * invdx;
        worst = std::max(worst, std::fabs(dhdt - rhs));
      }
  return worst;
}

std::array<double, 3> conserved_totals(const Field& u) {
  const Grid& g = u.grid();
  std::array<double, 3> out{0, 0, 0};
  for (int c = 0; c < u.comps(); ++c) {
    double s = 0.0;
    for (int iy = 0; iy < g.ny(); ++iy)
      for (int ix = 0; ix < g.n[0]; ++ix) s += u.at(c, ix, iy);
    out[c] = s * g.cell_volume();
  }
  return out;
}

}  // namespace veckin
