#include <doctest.h>

#include <cmath>
#include <random>

#include "veckin/fluxes.hpp"

using namespace veckin;

namespace {
std::mt19937_64 rng(991);

FluxRequest make_req(const ModelSpec& model, int m, int d, const Vec& ul, const Vec& ur,
                     const Pos& x = Pos{0, 0}) {
  FluxRequest r;
  r.m = m;
  r.d = d;
  r.UL = ul;
  r.UR = ur;
  r.VL = model.entropy_variable(ul);
  r.VR = model.entropy_variable(ur);
  for (int c = 0; c < model.p; ++c) r.jump_cur[c] = r.VR[c] - r.VL[c];
  r.x = x;
  return r;
}
}  // namespace

TEST_CASE("scalar EC flux hand values") {
  SUBCASE("advection: v(a+b) Ubar") {
    ModelSpec m = make_scalar_model(ScalarModelKind::Advection1D);
    VelocitySet s = build_velocity_set(1, 2.0);
    FluxRequest r = make_req(m, 0, 0, Vec{1.0, 0, 0}, Vec{3.0, 0, 0});
    CHECK(ec_flux_scalar(m, s, r) == doctest::Approx(3.0));
  }
  SUBCASE("burgers: chi ratio and the macroscopic sum") {
    ModelSpec m = make_scalar_model(ScalarModelKind::Burgers1D);
    VelocitySet s = build_velocity_set(1, 2.0);
    FluxRequest r0 = make_req(m, 0, 0, Vec{0.0, 0, 0}, Vec{2.0, 0, 0});
    const double f0 = ec_flux_scalar(m, s, r0);
    CHECK(f0 == doctest::Approx(4.0 / 3.0));
    FluxRequest r1 = r0;
    r1.m = 1;
    const double f1 = ec_flux_scalar(m, s, r1);
    CHECK(f0 + f1 == doctest::Approx(2.0 / 3.0));  // (UL^2+UL UR+UR^2)/6
  }
  SUBCASE("equal states: consistency through the tie branch") {
    ModelSpec m = make_scalar_model(ScalarModelKind::Burgers1D);
    VelocitySet s = build_velocity_set(1, 2.0);
    const Vec c{0.7, 0, 0};
    FluxRequest r = make_req(m, 0, 0, c, c);
    const double vf = s.v[0][0] * maxwellian(m, s, c, r.x)[0][0];
    CHECK(ec_flux_scalar(m, s, r) == vf);
  }
}

TEST_CASE("shallow water EC flux hand values") {
  ModelSpec m = make_sw_model(1);
  VelocitySet s = build_velocity_set(1, 3.0);
  SUBCASE("rho jump at rest") {
    FluxRequest r = make_req(m, 0, 0, Vec{1.0, 0.0, 0}, Vec{3.0, 0.0, 0});
    const Vec f = ec_flux_sw(s, r, 2);
    CHECK(f[0] == doctest::Approx(3.0));
    CHECK(f[1] == doctest::Approx(1.25));
  }
  SUBCASE("equal states reduce to v F_m") {
    const Vec u{2.0, 3.0, 0};
    FluxRequest r = make_req(m, 1, 0, u, u);
    const Vec f = ec_flux_sw(s, r, 2);
    const Vec fm = maxwellian(m, s, u, r.x)[1];
    for (int c = 0; c < 2; ++c) CHECK(f[c] == doctest::Approx(s.v[1][0] * fm[c]));
  }
  FluxRequest bad;
  bad.UL = Vec{-1.0, 0, 0};
  bad.UR = Vec{1.0, 0, 0};
  CHECK_THROWS_AS(ec_flux_sw(s, bad, 2), positivity_error);
}

TEST_CASE("EC condition residual on random pairs (kinetic and macroscopic)") {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  SUBCASE("scalar models") {
    for (auto kind : {ScalarModelKind::Advection1D, ScalarModelKind::Burgers1D,
                      ScalarModelKind::Rotation2D}) {
      ModelSpec m = make_scalar_model(kind);
      VelocitySet s = build_velocity_set(m.D, 5.0);
      for (int i = 0; i < 800; ++i) {
        const Vec ul{2.0 * un(rng), 0, 0};
        const Vec ur{2.0 * un(rng), 0, 0};
        const Pos x{un(rng), 0.5 + un(rng)};
        for (int d = 0; d < m.D; ++d) {
          double total = 0.0, chisum_jump = 0.0;
          for (int mm = 0; mm < s.M; ++mm) {
            if (!s.active(mm, d)) continue;
            FluxRequest r = make_req(m, mm, d, ul, ur, x);
            const double f = ec_flux_scalar(m, s, r);
            const double jchi = chi_potential(m, s, ur, x)[mm][d] -
                                chi_potential(m, s, ul, x)[mm][d];
            CHECK(std::fabs(r.jump_cur[0] * f - jchi) <= 1e-11 * (1.0 + std::fabs(jchi)));
            total += f;
            chisum_jump += jchi;
          }
          const double jpsi = m.entropy_potential(ur, x, d) - m.entropy_potential(ul, x, d);
          const double jv = m.entropy_variable(ur)[0] - m.entropy_variable(ul)[0];
          CHECK(std::fabs(jv * total - jpsi) <= 1e-11 * (1.0 + std::fabs(jpsi)));
          (void)chisum_jump;
        }
      }
    }
  }
  SUBCASE("shallow water") {
    for (int D : {1, 2}) {
      ModelSpec m = make_sw_model(D);
      VelocitySet s = build_velocity_set(D, 14.0);
      for (int i = 0; i < 800; ++i) {
        Vec ul{0.2 + 4.0 * (0.5 * (un(rng) + 1)), 0, 0};
        Vec ur{0.2 + 4.0 * (0.5 * (un(rng) + 1)), 0, 0};
        for (int j = 0; j < D; ++j) {
          ul[1 + j] = ul[0] * 3.0 * un(rng);
          ur[1 + j] = ur[0] * 3.0 * un(rng);
        }
        for (int d = 0; d < D; ++d) {
          Vec total{0, 0, 0};
          FluxRequest r = make_req(m, 0, d, ul, ur);
          for (int mm = 0; mm < s.M; ++mm) {
            r.m = mm;
            Vec f{0, 0, 0};
            if (s.active(mm, d)) f = ec_flux_sw(s, r, m.p);
            const double jchi = chi_potential(m, s, ur, r.x)[mm][d] -
                                chi_potential(m, s, ul, r.x)[mm][d];
            CHECK(std::fabs(dot(r.jump_cur, f, m.p) - jchi) <=
                  1e-11 * (1.0 + std::fabs(jchi)));
            for (int c = 0; c < m.p; ++c) total[c] += f[c];
          }
          const double jpsi =
              m.entropy_potential(ur, r.x, d) - m.entropy_potential(ul, r.x, d);
          CHECK(std::fabs(dot(r.jump_cur, total, m.p) - jpsi) <=
                1e-11 * (1.0 + std::fabs(jpsi)));
        }
      }
    }
  }
}

TEST_CASE("minmod") {
  CHECK(minmod(2.0, 3.0) == 2.0);
  CHECK(minmod(-1.0, 2.0) == 0.0);
  CHECK(minmod(0.0, 5.0) == 0.0);
  CHECK(minmod(-3.0, -2.0) == -2.0);
  CHECK(minmod(5.0, 0.0) == 0.0);
}

TEST_CASE("reconstructed scaled jump") {
  Mat id{};
  id[0][0] = id[1][1] = id[2][2] = 1.0;
  SUBCASE("linear data kills the dissipation") {
    const Vec w{2.0, -1.0, 0.5};
    const Vec rec = reconstruct_scaled_jump(id, w, w, w, 3);
    for (int c = 0; c < 3; ++c) CHECK(rec[c] == 0.0);
  }
  SUBCASE("opposite-sign neighbors keep full dissipation") {
    const Vec w{2.0, 0, 0};
    const Vec wn{-1.0, 0, 0};
    const Vec rec = reconstruct_scaled_jump(id, wn, w, wn, 1);
    CHECK(rec[0] == 2.0);
  }
  SUBCASE("hand value 0.5") {
    const Vec rec = reconstruct_scaled_jump(id, Vec{1.0, 0, 0}, Vec{2.0, 0, 0},
                                            Vec{3.0, 0, 0}, 1);
    CHECK(rec[0] == 0.5);
  }
  SUBCASE("sign property on 100000 random triples, exactly") {
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int i = 0; i < 100000; ++i) {
      const Vec jp{un(rng), 0, 0}, jc{un(rng), 0, 0}, jn{un(rng), 0, 0};
      const double rec = reconstruct_scaled_jump(id, jp, jc, jn, 1)[0];
      const double w = jc[0];
      if (w >= 0.0) {
        CHECK(rec >= 0.0);
        CHECK(rec <= w);
      } else {
        CHECK(rec <= 0.0);
        CHECK(rec >= w);
      }
    }
  }
}

TEST_CASE("first-order ES dissipation") {
  SUBCASE("zero jump gives zero") {
    ModelSpec m = make_sw_model(1);
    VelocitySet s = build_velocity_set(1, 4.0);
    const Vec u{1.5, 0.7, 0};
    FluxRequest r = make_req(m, 0, 0, u, u);
    const Vec dis = es_dissipation_first(m, s, r);
    for (int c = 0; c < 2; ++c) CHECK(dis[c] == 0.0);
  }
  SUBCASE("scalar burgers wave speed at the average") {
    ModelSpec m = make_scalar_model(ScalarModelKind::Burgers1D);
    VelocitySet s = build_velocity_set(1, 4.0);
    FluxRequest r = make_req(m, 0, 0, Vec{0.5, 0, 0}, Vec{1.5, 0, 0});
    // Ubar=1, |speed|=1, jump in V = 2(1.5-0.5) = 2 -> (1/(2M)) * 2 = 0.5
    CHECK(es_dissipation_first(m, s, r)[0] == doctest::Approx(0.5));
  }
  SUBCASE("quadratic form is nonnegative on random SW pairs") {
    std::uniform_real_distribution<double> un(-1.0, 1.0);
    for (int D : {1, 2}) {
      ModelSpec m = make_sw_model(D);
      VelocitySet s = build_velocity_set(D, 14.0);
      for (int i = 0; i < 500; ++i) {
        Vec ul{0.2 + 4.0 * (0.5 * (un(rng) + 1)), 0, 0};
        Vec ur{0.2 + 4.0 * (0.5 * (un(rng) + 1)), 0, 0};
        for (int j = 0; j < D; ++j) {
          ul[1 + j] = ul[0] * 3.0 * un(rng);
          ur[1 + j] = ur[0] * 3.0 * un(rng);
        }
        for (int d = 0; d < D; ++d) {
          FluxRequest r = make_req(m, 0, d, ul, ur);
          const Vec dis = es_dissipation_first(m, s, r);
          CHECK(dot(r.jump_cur, dis, m.p) >= 0.0);
        }
      }
    }
  }
}

TEST_CASE("interface_flux dispatch and theorem-2 sum identity") {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  ModelSpec m = make_sw_model(1);
  VelocitySet s = build_velocity_set(1, 9.0);
  for (int i = 0; i < 300; ++i) {
    Vec ul{0.3 + 3.0 * (0.5 * (un(rng) + 1)), 0, 0};
    Vec ur{0.3 + 3.0 * (0.5 * (un(rng) + 1)), 0, 0};
    ul[1] = ul[0] * 2.0 * un(rng);
    ur[1] = ur[0] * 2.0 * un(rng);
    FluxRequest r = make_req(m, 0, 0, ul, ur);

    // EC scheme reduces to the EC kernel
    const Vec fec = interface_flux(SchemeKind::EC, m, s, r);
    const Vec kernel = ec_flux_sw(s, r, 2);
    for (int c = 0; c < 2; ++c) CHECK(fec[c] == kernel[c]);

    // sum over m of ES1 fluxes = macroscopic EC flux - 1/2 R Lam R^T [[V]]
    Vec sum{0, 0, 0};
    for (int mm = 0; mm < s.M; ++mm) {
      r.m = mm;
      const Vec f = interface_flux(SchemeKind::ES1, m, s, r);
      for (int c = 0; c < 2; ++c) sum[c] += f[c];
    }
    r.m = 0;
    Vec ecsum{0, 0, 0};
    for (int mm = 0; mm < s.M; ++mm) {
      r.m = mm;
      const Vec f = ec_flux_sw(s, r, 2);
      for (int c = 0; c < 2; ++c) ecsum[c] += f[c];
    }
    SWState mean;
    mean.rho = 0.5 * (ul[0] + ur[0]);
    mean.u[0] = 0.5 * (ul[1] / ul[0] + ur[1] / ur[0]);
    Mat R;
    Vec lam;
    sw_eigen_basis(mean, 1, 0, R, lam);
    const Vec w = matvec_t(R, r.jump_cur, 2);
    Vec theta{lam[0] * w[0], lam[1] * w[1], 0};
    const Vec dvec = matvec(R, theta, 2);
    for (int c = 0; c < 2; ++c)
      CHECK(sum[c] == doctest::Approx(ecsum[c] - 0.5 * dvec[c]).epsilon(1e-12));
  }

  // ES1 with equal states is consistent
  const Vec u{1.2, 0.4, 0};
  FluxRequest r = make_req(m, 1, 0, u, u);
  const Vec f = interface_flux(SchemeKind::ES1, m, s, r);
  const Vec fm = maxwellian(m, s, u, r.x)[1];
  for (int c = 0; c < 2; ++c) CHECK(f[c] == doctest::Approx(s.v[1][0] * fm[c]));
}

TEST_CASE("ES2 dissipation nonnegativity in characteristic space") {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  ModelSpec m = make_sw_model(2);
  VelocitySet s = build_velocity_set(2, 16.0);
  for (int i = 0; i < 300; ++i) {
    Vec ul{0.3 + 3.0 * (0.5 * (un(rng) + 1)), 0, 0};
    Vec ur{0.3 + 3.0 * (0.5 * (un(rng) + 1)), 0, 0};
    for (int j = 0; j < 2; ++j) {
      ul[1 + j] = ul[0] * 2.0 * un(rng);
      ur[1 + j] = ur[0] * 2.0 * un(rng);
    }
    FluxRequest r = make_req(m, 0, 0, ul, ur);
    for (int c = 0; c < 3; ++c) {
      r.jump_prev[c] = un(rng);
      r.jump_next[c] = un(rng);
    }
    SWState mean;
    mean.rho = 0.5 * (ul[0] + ur[0]);
    mean.u[0] = 0.5 * (ul[1] / ul[0] + ur[1] / ur[0]);
    mean.u[1] = 0.5 * (ul[2] / ul[0] + ur[2] / ur[0]);
    Mat R;
    Vec lam;
    sw_eigen_basis(mean, 2, 0, R, lam);
    const Vec w = matvec_t(R, r.jump_cur, 3);
    const Vec rec = reconstruct_scaled_jump(R, r.jump_prev, r.jump_cur, r.jump_next, 3);
    double q = 0.0;
    for (int c = 0; c < 3; ++c) q += w[c] * lam[c] * rec[c];
    CHECK(q >= 0.0);  // sign property => componentwise products >= 0
  }
}
