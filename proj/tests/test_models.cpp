#include <doctest.h>

#include <cmath>
#include <random>

#include "veckin/models.hpp"

using namespace veckin;

namespace {

// test-only 3x3 Cholesky; returns false if not positive-definite
bool cholesky_ok(const Mat& a, int p) {
  Mat l{};
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) return false;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return true;
}

Mat fd_jacobian(const std::function<Vec(const Vec&)>& f, const Vec& u, int p,
                double h = 1e-6) {
  Mat j{};
  for (int c = 0; c < p; ++c) {
    Vec up = u, um = u;
    up[c] += h;
    um[c] -= h;
    const Vec fp = f(up), fm = f(um);
    for (int r = 0; r < p; ++r) j[r][c] = (fp[r] - fm[r]) / (2.0 * h);
  }
  return j;
}

Mat invert3(const Mat& m, int p) {
  // Gauss-Jordan, small and test-only
  Mat a = m, inv{};
  for (int i = 0; i < p; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < p; ++col) {
    int piv = col;
    for (int r = col + 1; r < p; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const double d = a[col][col];
    for (int c = 0; c < p; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (int r = 0; r < p; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      for (int c = 0; c < p; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::mt19937_64 rng(777);

Vec random_admissible(const ModelSpec& m) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  if (m.is_scalar()) return Vec{2.0 * un(rng), 0, 0};
  Vec u{0.5 + 2.0 * (0.5 * (un(rng) + 1.0)), 0, 0};
  for (int j = 0; j < m.D; ++j) u[1 + j] = u[0] * 2.0 * un(rng);
  return u;
}

}  // namespace

TEST_CASE("burgers entropy machinery at U=2") {
  ModelSpec m = make_scalar_model(ScalarModelKind::Burgers1D);
  const Vec u{2.0, 0, 0};
  const Pos x{0.0, 0.0};
  CHECK(m.flux(u, x, 0)[0] == doctest::Approx(2.0));
  CHECK(m.entropy(u) == doctest::Approx(4.0));
  CHECK(m.entropy_flux(u, x, 0) == doctest::Approx(16.0 / 3.0));
  CHECK(m.entropy_variable(u)[0] == doctest::Approx(4.0));
  CHECK(m.entropy_potential(u, x, 0) == doctest::Approx(8.0 / 3.0));
}

TEST_CASE("advection zero state and rotation center") {
  ModelSpec adv = make_scalar_model(ScalarModelKind::Advection1D);
  const Vec z{0, 0, 0};
  const Pos x{0.3, 0.0};
  CHECK(adv.flux(z, x, 0)[0] == 0.0);
  CHECK(adv.entropy(z) == 0.0);
  CHECK(adv.entropy_potential(z, x, 0) == 0.0);

  ModelSpec rot = make_scalar_model(ScalarModelKind::Rotation2D);
  const Pos center{0.5, 0.5};
  const Vec u{3.7, 0, 0};
  CHECK(rot.flux(u, center, 0)[0] == 0.0);
  CHECK(rot.flux(u, center, 1)[0] == 0.0);
}

TEST_CASE("shallow water hand-derived values") {
  ModelSpec m = make_sw_model(1);
  const Pos x{0, 0};
  SUBCASE("rho=1 u=0") {
    const Vec u{1.0, 0.0, 0};
    const Vec v = m.entropy_variable(u);
    CHECK(v[0] == doctest::Approx(1.0));
    CHECK(v[1] == doctest::Approx(0.0));
    CHECK(m.entropy(u) == doctest::Approx(0.5));
    CHECK(m.entropy_flux(u, x, 0) == doctest::Approx(0.0));
    CHECK(m.entropy_potential(u, x, 0) == doctest::Approx(0.0));
  }
  SUBCASE("rho=2 u1=3") {
    const Vec u{2.0, 6.0, 0};
    const Vec g = m.flux(u, x, 0);
    CHECK(g[0] == doctest::Approx(6.0));
    CHECK(g[1] == doctest::Approx(20.0));
    CHECK(m.entropy(u) == doctest::Approx(11.0));
    CHECK(m.entropy_flux(u, x, 0) == doctest::Approx(39.0));
    CHECK(m.entropy_potential(u, x, 0) == doctest::Approx(6.0));
    // potential identity by hand: V.G - omega
    const Vec v = m.entropy_variable(u);
    CHECK(v[0] * g[0] + v[1] * g[1] - m.entropy_flux(u, x, 0) == doctest::Approx(6.0));
  }
  SUBCASE("psi vanishes with u_d") {
    for (double rho : {0.3, 1.0, 7.5}) {
      const Vec u{rho, 0.0, 0};
      CHECK(m.entropy_potential(u, x, 0) == 0.0);
    }
  }
  CHECK_THROWS_AS(m.entropy(Vec{-1.0, 0, 0}), positivity_error);
}

TEST_CASE("potential identity psi = V.G - omega on random states") {
  for (auto kind : {ScalarModelKind::Advection1D, ScalarModelKind::Burgers1D,
                    ScalarModelKind::Rotation2D}) {
    ModelSpec m = make_scalar_model(kind);
    std::uniform_real_distribution<double> ux(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const Vec u = random_admissible(m);
      const Pos x{ux(rng), 0.5 + ux(rng)};
      for (int d = 0; d < m.D; ++d) {
        const double vg = dot(m.entropy_variable(u), m.flux(u, x, d), 1);
        const double psi = m.entropy_potential(u, x, d);
        CHECK(std::fabs(psi - (vg - m.entropy_flux(u, x, d))) <=
              1e-12 * (1.0 + std::fabs(vg)));
      }
    }
  }
  for (int D : {1, 2}) {
    ModelSpec m = make_sw_model(D);
    for (int i = 0; i < 100; ++i) {
      const Vec u = random_admissible(m);
      const Pos x{0, 0};
      for (int d = 0; d < D; ++d) {
        const double vg = dot(m.entropy_variable(u), m.flux(u, x, d), m.p);
        const double psi = m.entropy_potential(u, x, d);
        CHECK(std::fabs(psi - (vg - m.entropy_flux(u, x, d))) <=
              1e-12 * (1.0 + std::fabs(vg)));
      }
    }
  }
}

TEST_CASE("entropy hessian is SPD (finite differences + Cholesky)") {
  for (int D : {1, 2}) {
    ModelSpec m = make_sw_model(D);
    for (int i = 0; i < 20; ++i) {
      const Vec u = random_admissible(m);
      Mat h = fd_jacobian(m.entropy_variable, u, m.p);
      // symmetrize the FD noise before the Cholesky probe
      for (int r = 0; r < m.p; ++r)
        for (int c = 0; c < r; ++c) {
          const double s = 0.5 * (h[r][c] + h[c][r]);
          h[r][c] = h[c][r] = s;
        }
      CHECK(cholesky_ok(h, m.p));
    }
  }
}

TEST_CASE("eigen basis: scaling, eigenvectors, hand values") {
  SUBCASE("1d rest state") {
    Mat r;
    Vec lam;
    sw_eigen_basis(SWState{1.0, {0.0, 0.0}}, 1, 0, r, lam);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(r[0][0] == doctest::Approx(s));
    CHECK(r[0][1] == doctest::Approx(s));
    CHECK(r[1][0] == doctest::Approx(-s));
    CHECK(r[1][1] == doctest::Approx(s));
    CHECK(lam[0] == doctest::Approx(1.0));
    CHECK(lam[1] == doctest::Approx(1.0));
    // R R^T = dU/dV = identity at this state
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        double rr = 0.0;
        for (int k = 0; k < 2; ++k) rr += r[i][k] * r[j][k];
        CHECK(rr == doctest::Approx(i == j ? 1.0 : 0.0));
      }
  }
  SUBCASE("1d lambda at rho=1 u=5") {
    Mat r;
    Vec lam;
    sw_eigen_basis(SWState{1.0, {5.0, 0.0}}, 1, 0, r, lam);
    CHECK(lam[0] == doctest::Approx(4.0));
    CHECK(lam[1] == doctest::Approx(6.0));
  }
  SUBCASE("random states: R R^T matches FD(dU/dV), columns are eigenvectors") {
    for (int D : {1, 2}) {
      ModelSpec m = make_sw_model(D);
      for (int i = 0; i < 25; ++i) {
        const Vec u = random_admissible(m);
        SWState s;
        s.rho = u[0];
        s.u[0] = u[1] / u[0];
        s.u[1] = D == 2 ? u[2] / u[0] : 0.0;
        for (int d = 0; d < D; ++d) {
          Mat r;
          Vec lam;
          sw_eigen_basis(s, D, d, r, lam);
          // Gram condition vs FD of inverse Hessian
          const Mat h = fd_jacobian(m.entropy_variable, u, m.p);
          const Mat hinv = invert3(h, m.p);
          for (int a = 0; a < m.p; ++a)
            for (int b = 0; b < m.p; ++b) {
              double rr = 0.0;
              for (int k = 0; k < m.p; ++k) rr += r[a][k] * r[b][k];
              CHECK(std::fabs(rr - hinv[a][b]) <= 1e-6 * (1.0 + std::fabs(hinv[a][b])));
            }
          // eigenvector residual dG r_k = sign * lam_k r_k
          const Pos xx{0, 0};
          auto flux_d = [&](const Vec& w) { return m.flux(w, xx, d); };
          const Mat a_jac = fd_jacobian(flux_d, u, m.p, 1e-7);
          const double c = std::sqrt(2.0 * kSwKappa * s.rho);
          const double ud = s.u[d];
          const double eig[3] = {ud - c, ud, ud + c};
          for (int k = 0; k < m.p; ++k) {
            const double ev = D == 1 ? (k == 0 ? ud - c : ud + c) : eig[k];
            for (int rr2 = 0; rr2 < m.p; ++rr2) {
              double av = 0.0;
              for (int cc = 0; cc < m.p; ++cc) av += a_jac[rr2][cc] * r[cc][k];
              CHECK(std::fabs(av - ev * r[rr2][k]) <= 1e-5);
            }
          }
        }
      }
    }
  }
  CHECK_THROWS_AS(
      [] {
        Mat r;
        Vec lam;
        sw_eigen_basis(SWState{-0.1, {0, 0}}, 1, 0, r, lam);
      }(),
      positivity_error);
}

TEST_CASE("burgers exact solution") {
  CHECK(burgers_exact(0.37, 0.0) == doctest::Approx(std::sin(2 * M_PI * 0.37)));
  CHECK(burgers_exact(0.0, 0.01) == doctest::Approx(0.0));
  // independent bisection oracle
  auto bisect = [](double x, double t) {
    auto f = [&](double u) { return u - std::sin(2 * M_PI * (x - u * t)); };
    double a = -1.0, b = 1.0, fa = f(a);
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (a + b), fm = f(mid);
      if ((fa <= 0.0) == (fm <= 0.0)) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    return 0.5 * (a + b);
  };
  const double t_spot = 0.1 / (2.0 * M_PI);
  CHECK(std::fabs(burgers_exact(0.3, t_spot) - bisect(0.3, t_spot)) <= 1e-12);
  std::uniform_real_distribution<double> ux(0.0, 1.0), ut(0.0, 0.9 / (2.0 * M_PI));
  for (int i = 0; i < 100; ++i) {
    const double x = ux(rng), t = ut(rng);
    CHECK(std::fabs(burgers_exact(x, t) - bisect(x, t)) <= 1e-10);
  }
  CHECK_THROWS_AS(burgers_exact(0.5, 0.0, -1.0), domain_error);
}

TEST_CASE("advection exact solution") {
  CHECK(advection_exact(1.234, 0.0) == doctest::Approx(std::pow(std::sin(1.234), 4)));
  CHECK(advection_exact(2.0, 2 * M_PI) == doctest::Approx(advection_exact(2.0, 0.0)));
  CHECK(advection_exact(M_PI / 2, 0.0) == doctest::Approx(1.0));
}
