#include "veckin/kinetic.hpp"

#include <cmath>

#include "veckin/kernels.hpp"
#include "veckin/threading.hpp"

namespace veckin {

VelocitySet build_velocity_set(int D, double lambda) {
  if (!(lambda > 0.0)) throw domain_error("build_velocity_set: lambda must be positive");
  VelocitySet s;
  s.D = D;
  s.lambda = lambda;
  const double binv = 1.0 / (2.0 * lambda);
  if (D == 1) {
    s.M = 2;
    s.a = {0.5, 0.5, 0.0, 0.0};
    s.v[0] = {lambda, 0.0};
    s.v[1] = {-lambda, 0.0};
    s.b[0] = {binv, 0.0};
    s.b[1] = {-binv, 0.0};
  } else if (D == 2) {
    s.M = 4;
    s.a = {0.25, 0.25, 0.25, 0.25};
    s.v[0] = {lambda, 0.0};
    s.v[1] = {0.0, lambda};
    s.v[2] = {-lambda, 0.0};
    s.v[3] = {0.0, -lambda};
    s.b[0] = {binv, 0.0};
    s.b[1] = {0.0, binv};
    s.b[2] = {-binv, 0.0};
    s.b[3] = {0.0, -binv};
  } else {
    throw domain_error("build_velocity_set: D must be 1 or 2");
  }
  return s;
}

double lambda_bound(const ModelSpec& model, const Field& field, double safety) {
  if (!(safety > 1.0)) throw domain_error("lambda_bound: safety must exceed 1");
  const Grid& g = field.grid();
  double sup = 0.0;
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix) {
      const Pos x{g.center(0, ix), g.dim == 2 ? g.center(1, iy) : 0.0};
      const double w = model.max_wave_speed(field.state(ix, iy), x);
      if (!std::isfinite(w)) throw numerical_error("lambda_bound: non-finite wave speed");
      sup = std::max(sup, w);
    }
  const double lam = safety * (model.D == 1 ? 1.0 : 2.0) * sup;
  return std::max(lam, 1e-8);
}

std::array<Vec, 4> maxwellian(const ModelSpec& model, const VelocitySet& vset,
                              const Vec& u, const Pos& x) {
  std::array<Vec, 4> out{};
  Vec g[2];
  for (int d = 0; d < model.D; ++d) g[d] = model.flux(u, x, d);
  for (int m = 0; m < vset.M; ++m) {
    for (int c = 0; c < model.p; ++c) {
      double f = vset.a[m] * u[c];
      for (int d = 0; d < model.D; ++d) f += vset.b[m][d] * g[d][c];
      out[m][c] = f;
    }
  }
  return out;
}

std::array<double, 4> kinetic_entropy(const ModelSpec& model, const VelocitySet& vset,
                                      const Vec& u, const Pos& x) {
  std::array<double, 4> out{};
  const double eta = model.entropy(u);
  double om[2] = {0.0, 0.0};
  for (int d = 0; d < model.D; ++d) om[d] = model.entropy_flux(u, x, d);
  for (int m = 0; m < vset.M; ++m) {
    double h = vset.a[m] * eta;
    for (int d = 0; d < model.D; ++d) h += vset.b[m][d] * om[d];
    out[m] = h;
  }
  return out;
}

std::array<std::array<double, 2>, 4> chi_potential(const ModelSpec& model,
                                                   const VelocitySet& vset, const Vec& u,
                                                   const Pos& x) {
  std::array<std::array<double, 2>, 4> out{};
  const Vec v = model.entropy_variable(u);
  const auto fm = maxwellian(model, vset, u, x);
  const auto hm = kinetic_entropy(model, vset, u, x);
  for (int m = 0; m < vset.M; ++m)
    for (int d = 0; d < model.D; ++d)
      out[m][d] = vset.v[m][d] * (dot(v, fm[m], model.p) - hm[m]);
  return out;
}

KineticField make_kinetic_field(const Grid& g, int M, int p) {
  KineticField kf;
  kf.f.assign(M, Field(g, p));
  return kf;
}

void moments_into(const KineticField& kf, Field& u) {
  const auto& ops = kernels::active();
  const long n = u.plane_size();
  for (int c = 0; c < u.comps(); ++c) {
    ops.add2(kf.f[0].plane(c), kf.f[1].plane(c), u.plane(c), std::size_t(n));
    for (int m = 2; m < kf.M(); ++m) ops.acc(u.plane(c), kf.f[m].plane(c), std::size_t(n));
  }
}

Field moments(const KineticField& kf) {
  if (kf.M() < 2) throw shape_error("moments: kinetic field has fewer than 2 velocities");
  Field u(kf.f[0].grid(), kf.f[0].comps());
  moments_into(kf, u);
  return u;
}

void maxwellian_field(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                      KineticField& kf) {
  const Grid& g = u.grid();
  const int p = model.p;
  const int rows = g.dim == 2 ? g.n[1] + 2 * Grid::ghost : 1;
  const int y0 = g.dim == 2 ? -Grid::ghost : 0;
  parallel_for(rows, [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      const int iy = y0 + r;
      const double ycen = g.dim == 2 ? g.center(1, iy) : 0.0;
      for (int ix = -Grid::ghost; ix < g.n[0] + Grid::ghost; ++ix) {
        const Pos x{g.center(0, ix), ycen};
        if (model.is_shallow_water()) {
          const double rho = u.at(0, ix, iy);
          const double q1 = u.at(1, ix, iy);
          const double q2 = model.D == 2 ? u.at(2, ix, iy) : 0.0;
          const double inv = 1.0 / rho;
          const double u1 = q1 * inv, u2 = q2 * inv;
          const double pr = model.kappa * rho * rho;
          for (int m = 0; m < vset.M; ++m) {
            const double b1 = vset.b[m][0], b2 = vset.b[m][1];
            kf.f[m].at(0, ix, iy) = vset.a[m] * rho + b1 * q1 + b2 * q2;
            kf.f[m].at(1, ix, iy) =
                vset.a[m] * q1 + b1 * (q1 * u1 + pr) + b2 * (q1 * u2);
            if (model.D == 2)
              kf.f[m].at(2, ix, iy) =
                  vset.a[m] * q2 + b1 * (q2 * u1) + b2 * (q2 * u2 + pr);
          }
        } else {
          const auto fm = maxwellian(model, vset, u.state(ix, iy), x);
          for (int m = 0; m < vset.M; ++m)
            for (int c = 0; c < p; ++c) kf.f[m].at(c, ix, iy) = fm[m][c];
        }
      }
    }
  });
}

}  // namespace veckin
