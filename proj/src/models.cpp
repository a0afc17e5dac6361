#include "veckin/models.hpp"

#include <cmath>

namespace veckin {

namespace {

double rot_coef(const Pos& x, int d) {
  return d == 0 ? -(x[1] - 0.5) : (x[0] - 0.5);
}

SWState sw_prim(const Vec& u, int D) {
  if (!(u[0] > 0.0)) throw positivity_error("shallow water: nonpositive depth");
  SWState s;
  s.rho = u[0];
  s.u[0] = u[1] / u[0];
  s.u[1] = D == 2 ? u[2] / u[0] : 0.0;
  return s;
}

}  // namespace

ModelSpec make_scalar_model(ScalarModelKind kind) {
  ModelSpec m;
  m.p = 1;
  switch (kind) {
    case ScalarModelKind::Advection1D:
      m.kind = ModelKind::Advection1D;
      m.D = 1;
      m.name = "advection1d";
      m.flux = [](const Vec& u, const Pos&, int) { return Vec{u[0], 0, 0}; };
      m.entropy = [](const Vec& u) { return 0.5 * u[0] * u[0]; };
      m.entropy_flux = [](const Vec& u, const Pos&, int) { return 0.5 * u[0] * u[0]; };
      m.entropy_variable = [](const Vec& u) { return Vec{u[0], 0, 0}; };
      m.entropy_potential = [](const Vec& u, const Pos&, int) { return 0.5 * u[0] * u[0]; };
      m.max_wave_speed = [](const Vec&, const Pos&) { return 1.0; };
      m.wave_speed_dir = [](const Vec&, const Pos&, int) { return 1.0; };
      break;
    case ScalarModelKind::Rotation2D:
      m.kind = ModelKind::Rotation2D;
      m.D = 2;
      m.name = "rotation2d";
      m.flux = [](const Vec& u, const Pos& x, int d) { return Vec{rot_coef(x, d) * u[0], 0, 0}; };
      m.entropy = [](const Vec& u) { return u[0] * u[0]; };
      m.entropy_flux = [](const Vec& u, const Pos& x, int d) { return rot_coef(x, d) * u[0] * u[0]; };
      m.entropy_variable = [](const Vec& u) { return Vec{2.0 * u[0], 0, 0}; };
      m.entropy_potential = [](const Vec& u, const Pos& x, int d) { return rot_coef(x, d) * u[0] * u[0]; };
      m.max_wave_speed = [](const Vec&, const Pos& x) {
        return std::max(std::fabs(rot_coef(x, 0)), std::fabs(rot_coef(x, 1)));
      };
      m.wave_speed_dir = [](const Vec&, const Pos& x, int d) { return std::fabs(rot_coef(x, d)); };
      break;
    case ScalarModelKind::Burgers1D:
      m.kind = ModelKind::Burgers1D;
      m.D = 1;
      m.name = "burgers1d";
      m.flux = [](const Vec& u, const Pos&, int) { return Vec{0.5 * u[0] * u[0], 0, 0}; };
      m.entropy = [](const Vec& u) { return u[0] * u[0]; };
      m.entropy_flux = [](const Vec& u, const Pos&, int) { return (2.0 / 3.0) * u[0] * u[0] * u[0]; };
      m.entropy_variable = [](const Vec& u) { return Vec{2.0 * u[0], 0, 0}; };
      m.entropy_potential = [](const Vec& u, const Pos&, int) { return u[0] * u[0] * u[0] / 3.0; };
      m.max_wave_speed = [](const Vec& u, const Pos&) { return std::fabs(u[0]); };
      m.wave_speed_dir = [](const Vec& u, const Pos&, int) { return std::fabs(u[0]); };
      break;
  }
  return m;
}

ModelSpec make_sw_model(int D) {
  if (D != 1 && D != 2) throw domain_error("make_sw_model: D must be 1 or 2");
  ModelSpec m;
  m.kind = D == 1 ? ModelKind::ShallowWater1D : ModelKind::ShallowWater2D;
  m.p = 1 + D;
  m.D = D;
  m.kappa = kSwKappa;
  m.name = D == 1 ? "shallow-water-1d" : "shallow-water-2d";
  m.has_eigen_basis = true;
  const double kappa = kSwKappa;
  m.flux = [D, kappa](const Vec& u, const Pos&, int d) {
    const SWState s = sw_prim(u, D);
    Vec g{0, 0, 0};
    g[0] = s.rho * s.u[d];
    for (int j = 0; j < D; ++j) g[1 + j] = s.rho * s.u[j] * s.u[d];
    g[1 + d] += kappa * s.rho * s.rho;
    return g;
  };
  m.entropy = [D, kappa](const Vec& u) {
    const SWState s = sw_prim(u, D);
    double uu = 0.0;
    for (int j = 0; j < D; ++j) uu += s.u[j] * s.u[j];
    return 0.5 * s.rho * uu + kappa * s.rho * s.rho;
  };
  m.entropy_flux = [D, kappa](const Vec& u, const Pos&, int d) {
    const SWState s = sw_prim(u, D);
    double uu = 0.0;
    for (int j = 0; j < D; ++j) uu += s.u[j] * s.u[j];
    return s.u[d] * (0.5 * s.rho * uu + 2.0 * kappa * s.rho * s.rho);
  };
  m.entropy_variable = [D, kappa](const Vec& u) {
    const SWState s = sw_prim(u, D);
    double uu = 0.0;
    for (int j = 0; j < D; ++j) uu += s.u[j] * s.u[j];
    Vec v{0, 0, 0};
    v[0] = 2.0 * kappa * s.rho - 0.5 * uu;
    for (int j = 0; j < D; ++j) v[1 + j] = s.u[j];
    return v;
  };
  m.entropy_potential = [D, kappa](const Vec& u, const Pos&, int d) {
    const SWState s = sw_prim(u, D);
    return kappa * s.rho * s.rho * s.u[d];
  };
  m.max_wave_speed = [D, kappa](const Vec& u, const Pos&) {
    const SWState s = sw_prim(u, D);
    const double c = std::sqrt(2.0 * kappa * s.rho);
    double w = 0.0;
    for (int d = 0; d < D; ++d) w = std::max(w, std::fabs(s.u[d]) + c);
    return w;
  };
  m.wave_speed_dir = [D, kappa](const Vec& u, const Pos&, int d) {
    const SWState s = sw_prim(u, D);
    return std::fabs(s.u[d]) + std::sqrt(2.0 * kappa * s.rho);
  };
  return m;
}

void sw_eigen_basis(const SWState& ubar, int D, int d, Mat& R, Vec& lambda) {
  if (!(ubar.rho > 0.0)) throw positivity_error("sw_eigen_basis: nonpositive depth");
  const double g = 2.0 * kSwKappa;
  const double c = std::sqrt(g * ubar.rho);
  const double s = 1.0 / std::sqrt(2.0 * g);
  R = Mat{};
  lambda = Vec{0, 0, 0};
  if (D == 1) {
    const double u = ubar.u[0];
    R[0][0] = s;
    R[0][1] = s;
    R[1][0] = s * (u - c);
    R[1][1] = s * (u + c);
    lambda = {std::fabs(u - c), std::fabs(u + c), 0.0};
    return;
  }
  const double u = ubar.u[0], v = ubar.u[1];
  const double ud = d == 0 ? u : v;
  const double sq = std::sqrt(ubar.rho);
  // columns: (u_d - c, u_d, u_d + c)
  R[0][0] = s;
  R[1][0] = s * (d == 0 ? u - c : u);
  R[2][0] = s * (d == 0 ? v : v - c);
  R[0][1] = 0.0;
  R[1][1] = d == 0 ? 0.0 : sq;
  R[2][1] = d == 0 ? sq : 0.0;
  R[0][2] = s;
  R[1][2] = s * (d == 0 ? u + c : u);
  R[2][2] = s * (d == 0 ? v : v + c);
  lambda = {std::fabs(ud - c), std::fabs(ud), std::fabs(ud + c)};
}

double advection_exact(double x, double t) {
  const double s = std::sin(x - t);
  return s * s * s * s;
}

double burgers_exact(double x, double t, double tol) {
  if (!(tol > 0.0)) throw domain_error("burgers_exact: tol must be positive");
  const double two_pi = 2.0 * M_PI;
  auto f = [&](double u) { return u - std::sin(two_pi * (x - u * t)); };
  double u = std::sin(two_pi * x);
  bool ok = false;
  for (int it = 0; it < 100; ++it) {
    const double r = f(u);
    if (std::fabs(r) <= tol) {
      ok = true;
      break;
    }
    const double fp = 1.0 + two_pi * t * std::cos(two_pi * (x - u * t));
    if (fp == 0.0 || !std::isfinite(fp)) break;
    u -= r / fp;
    if (u < -1.1 || u > 1.1 || !std::isfinite(u)) break;  // leave Newton, bisect
  }
  if (ok) return u;
  // Bisection fallback on [-1, 1]: f(-1) <= 0 <= f(1) always.
  double a = -1.0, b = 1.0;
  double fa = f(a);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (std::fabs(fm) <= tol) return mid;
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  const double mid = 0.5 * (a + b);
  if (std::fabs(f(mid)) <= std::max(tol, 1e-12))
    return mid;
  throw convergence_error("burgers_exact: no convergence (post-shock query?)");
}

}  // namespace veckin
