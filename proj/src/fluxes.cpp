#include "veckin/fluxes.hpp"

#include <cmath>
#include <vector>

#include "veckin/kernels.hpp"
#include "veckin/threading.hpp"

namespace veckin {

const char* scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::EC: return "ec";
    case SchemeKind::ES1: return "es1";
    case SchemeKind::ES2: return "es2";
    case SchemeKind::ES2Limited: return "es2-limited";
  }
  return "?";
}

SchemeKind scheme_from_name(const std::string& s) {
  if (s == "ec") return SchemeKind::EC;
  if (s == "es1") return SchemeKind::ES1;
  if (s == "es2") return SchemeKind::ES2;
  if (s == "es2-limited") return SchemeKind::ES2Limited;
  throw usage_error("unknown scheme: " + s);
}

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return std::min(a, b);
  if (a < 0.0 && b < 0.0) return std::max(a, b);
  return 0.0;
}

double ec_flux_scalar(const ModelSpec& model, const VelocitySet& vset,
                      const FluxRequest& req) {
  if (model.p != 1) throw shape_error("ec_flux_scalar: scalar models only");
  const double vl = req.VL[0], vr = req.VR[0];
  const double jump = vr - vl;
  const double tie = 1e-12 * (1.0 + std::fabs(vl) + std::fabs(vr));
  const int m = req.m, d = req.d;
  if (std::fabs(jump) > tie) {
    const double chi_l = chi_potential(model, vset, req.UL, req.x)[m][d];
    const double chi_r = chi_potential(model, vset, req.UR, req.x)[m][d];
    return (chi_r - chi_l) / jump;
  }
  const double vf_l = vset.v[m][d] * maxwellian(model, vset, req.UL, req.x)[m][0];
  const double vf_r = vset.v[m][d] * maxwellian(model, vset, req.UR, req.x)[m][0];
  return 0.5 * (vf_l + vf_r);
}

Vec ec_flux_sw(const VelocitySet& vset, const FluxRequest& req, int p) {
  if (!(req.UL[0] > 0.0) || !(req.UR[0] > 0.0))
    throw positivity_error("ec_flux_sw: nonpositive depth");
  const int m = req.m, d = req.d;
  const double v = vset.v[m][d];
  const double a = vset.a[m];
  const double b1 = vset.b[m][0];
  const double kappa = kSwKappa;
  const double rb = 0.5 * (req.UL[0] + req.UR[0]);
  const double u1l = req.UL[1] / req.UL[0], u1r = req.UR[1] / req.UR[0];
  const double u1b = 0.5 * (u1l + u1r);
  const double r2b = 0.5 * (req.UL[0] * req.UL[0] + req.UR[0] * req.UR[0]);
  Vec f{0, 0, 0};
  if (p == 2) {
    const double phi = a + b1 * u1b;
    f[0] = v * (rb * phi);
    f[1] = v * (rb * u1b * phi + kappa * b1 * r2b);
    return f;
  }
  const double b2 = vset.b[m][1];
  const double u2l = req.UL[2] / req.UL[0], u2r = req.UR[2] / req.UR[0];
  const double u2b = 0.5 * (u2l + u2r);
  const double phi = a + (b1 * u1b + b2 * u2b);
  f[0] = v * (rb * phi);
  f[1] = v * (rb * u1b * phi + kappa * b1 * r2b);
  f[2] = v * (rb * u2b * phi + kappa * b2 * r2b);
  return f;
}

Vec reconstruct_scaled_jump(const Mat& R, const Vec& jump_prev, const Vec& jump_cur,
                            const Vec& jump_next, int p) {
  const Vec w = matvec_t(R, jump_cur, p);
  const Vec wp = matvec_t(R, jump_prev, p);
  const Vec wn = matvec_t(R, jump_next, p);
  Vec rec{0, 0, 0};
  for (int k = 0; k < p; ++k)
    rec[k] = w[k] - 0.5 * (minmod(w[k], wn[k]) + minmod(wp[k], w[k]));
  return rec;
}

namespace {

// Dissipation vector Delta with flux_m = EC_m - (1/(2M)) Delta; shared by the
// per-interface ops and the bulk sweeps.
Vec es_delta_sw(SchemeKind scheme, int D, int d, double rho_mean, double u1_mean,
                double u2_mean, const Vec& jp, const Vec& jc, const Vec& jn) {
  const int p = 1 + D;
  SWState mean;
  mean.rho = rho_mean;
  mean.u = {u1_mean, u2_mean};
  Mat R;
  Vec lam;
  sw_eigen_basis(mean, D, d, R, lam);
  Vec theta{0, 0, 0};
  if (scheme == SchemeKind::ES1) {
    const Vec w = matvec_t(R, jc, p);
    for (int k = 0; k < p; ++k) theta[k] = lam[k] * w[k];
  } else {
    const Vec w = matvec_t(R, jc, p);
    const Vec wp = matvec_t(R, jp, p);
    const Vec wn = matvec_t(R, jn, p);
    for (int k = 0; k < p; ++k) {
      const double rec = w[k] - 0.5 * (minmod(w[k], wn[k]) + minmod(wp[k], w[k]));
      if (scheme == SchemeKind::ES2) {
        theta[k] = lam[k] * rec;
      } else {  // ES2Limited: first-order dissipation at non-monotone data
        const bool monotone = minmod(wp[k], w[k]) * minmod(w[k], wn[k]) != 0.0;
        theta[k] = lam[k] * (monotone ? rec : w[k]);
      }
    }
  }
  return matvec(R, theta, p);
}

double es_delta_scalar(SchemeKind scheme, double lam, double jp, double jc, double jn) {
  if (scheme == SchemeKind::ES1) return lam * jc;
  const double rec = jc - 0.5 * (minmod(jc, jn) + minmod(jp, jc));
  if (scheme == SchemeKind::ES2) return lam * rec;
  const bool monotone = minmod(jp, jc) * minmod(jc, jn) != 0.0;
  return lam * (monotone ? rec : jc);
}

}  // namespace

Vec es_dissipation_first(const ModelSpec& model, const VelocitySet& vset,
                         const FluxRequest& req) {
  const double w = 0.5 / vset.M;
  Vec out{0, 0, 0};
  if (model.is_scalar()) {
    const Vec ubar{0.5 * (req.UL[0] + req.UR[0]), 0, 0};
    const double lam = model.wave_speed_dir(ubar, req.x, req.d);
    out[0] = w * (lam * req.jump_cur[0]);
    return out;
  }
  const double rb = 0.5 * (req.UL[0] + req.UR[0]);
  const double u1b = 0.5 * (req.UL[1] / req.UL[0] + req.UR[1] / req.UR[0]);
  const double u2b =
      model.D == 2 ? 0.5 * (req.UL[2] / req.UL[0] + req.UR[2] / req.UR[0]) : 0.0;
  const Vec delta = es_delta_sw(SchemeKind::ES1, model.D, req.d, rb, u1b, u2b,
                                req.jump_prev, req.jump_cur, req.jump_next);
  for (int c = 0; c < model.p; ++c) out[c] = w * delta[c];
  return out;
}

Vec interface_flux(SchemeKind scheme, const ModelSpec& model, const VelocitySet& vset,
                   const FluxRequest& req) {
  Vec f{0, 0, 0};
  if (model.is_scalar()) {
    f[0] = ec_flux_scalar(model, vset, req);
  } else {
    f = ec_flux_sw(vset, req, model.p);
  }
  if (scheme == SchemeKind::EC) return f;
  const double w = 0.5 / vset.M;
  if (model.is_scalar()) {
    const Vec ubar{0.5 * (req.UL[0] + req.UR[0]), 0, 0};
    const double lam = model.wave_speed_dir(ubar, req.x, req.d);
    f[0] -= w * es_delta_scalar(scheme, lam, req.jump_prev[0], req.jump_cur[0],
                                req.jump_next[0]);
    return f;
  }
  const double rb = 0.5 * (req.UL[0] + req.UR[0]);
  const double u1b = 0.5 * (req.UL[1] / req.UL[0] + req.UR[1] / req.UR[0]);
  const double u2b =
      model.D == 2 ? 0.5 * (req.UL[2] / req.UL[0] + req.UR[2] / req.UR[0]) : 0.0;
  const Vec delta = es_delta_sw(scheme, model.D, req.d, rb, u1b, u2b, req.jump_prev,
                                req.jump_cur, req.jump_next);
  for (int c = 0; c < model.p; ++c) f[c] -= w * delta[c];
  return f;
}

// ---- bulk sweeps ----------------------------------------------------------

DerivedPlanes make_planes(const ModelSpec& model, const VelocitySet& vset, const Grid& g) {
  DerivedPlanes pl;
  if (model.is_shallow_water()) {
    const int n = model.D == 2 ? 5 : 4;
    pl.data = Field(g, n);
    pl.i_rho = 0;
    pl.i_u1 = 1;
    pl.i_u2 = model.D == 2 ? 2 : 1;
    pl.i_r2 = model.D == 2 ? 3 : 2;
    pl.i_v1 = model.D == 2 ? 4 : 3;
  } else {
    pl.data = Field(g, 1 + 2 * vset.M);
    pl.i_v = 0;
    pl.i_chi0 = 1;
    pl.i_vf0 = 1 + vset.M;
  }
  return pl;
}

namespace {

// the single direction along which velocity m carries flux
int active_dir(const VelocitySet& vset, int m) { return vset.v[m][0] != 0.0 ? 0 : 1; }

void precompute_sw(const ModelSpec& model, const Field& u, DerivedPlanes& pl) {
  const Grid& g = u.grid();
  const double kappa = model.kappa;
  const int rows = g.dim == 2 ? g.n[1] + 2 * Grid::ghost : 1;
  const int y0 = g.dim == 2 ? -Grid::ghost : 0;
  parallel_for(rows, [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      const int iy = y0 + r;
      const long base = u.index(-Grid::ghost, iy);
      const long nline = g.n[0] + 2 * Grid::ghost;
      const double* rho = u.plane(0) + base;
      const double* q1 = u.plane(1) + base;
      const double* q2 = model.D == 2 ? u.plane(2) + base : nullptr;
      double* prho = pl.data.plane(pl.i_rho) + base;
      double* pu1 = pl.data.plane(pl.i_u1) + base;
      double* pu2 = pl.data.plane(pl.i_u2) + base;
      double* pr2 = pl.data.plane(pl.i_r2) + base;
      double* pv1 = pl.data.plane(pl.i_v1) + base;
      for (long i = 0; i < nline; ++i) {
        const double r_ = rho[i];
        if (!(r_ > 0.0)) throw positivity_error("derived planes: nonpositive depth");
        const double u1 = q1[i] / r_;
        prho[i] = r_;
        pu1[i] = u1;
        pr2[i] = r_ * r_;
        double uu = u1 * u1;
        if (model.D == 2) {
          const double u2 = q2[i] / r_;
          pu2[i] = u2;
          uu = u1 * u1 + u2 * u2;
        }
        pv1[i] = 2.0 * kappa * r_ - 0.5 * uu;
      }
    }
  });
}

void precompute_scalar(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                       DerivedPlanes& pl) {
  const Grid& g = u.grid();
  const int rows = g.dim == 2 ? g.n[1] + 2 * Grid::ghost : 1;
  const int y0 = g.dim == 2 ? -Grid::ghost : 0;
  parallel_for(rows, [&](int r0, int r1) {
    for (int r = r0; r < r1; ++r) {
      const int iy = y0 + r;
      const double ycen = g.dim == 2 ? g.center(1, iy) : 0.0;
      for (int ix = -Grid::ghost; ix < g.n[0] + Grid::ghost; ++ix) {
        const Pos x{g.center(0, ix), ycen};
        const Vec uc = u.state(ix, iy);
        const double v = model.entropy_variable(uc)[0];
        const auto fm = maxwellian(model, vset, uc, x);
        const auto hm = kinetic_entropy(model, vset, uc, x);
        pl.data.at(pl.i_v, ix, iy) = v;
        for (int m = 0; m < vset.M; ++m) {
          const int d = active_dir(vset, m);
          const double vm = vset.v[m][d];
          pl.data.at(pl.i_chi0 + m, ix, iy) = vm * (v * fm[m][0] - hm[m]);
          pl.data.at(pl.i_vf0 + m, ix, iy) = vm * fm[m][0];
        }
      }
    }
  });
}

struct SweepContext {
  const ModelSpec* model;
  const VelocitySet* vset;
  const Field* u;
  const DerivedPlanes* pl;
  SchemeKind scheme;
  KineticField* rhs;
};

// EC flux lines for the velocities active along d, plus shared dissipation.
// L/R index the two cell lines adjacent to each interface of the line.
void flux_line(const SweepContext& c, int d, long baseL, long baseR, int n_iface,
               double x_first, double dx_along, double x_transverse,
               std::vector<double*>& out) {
  const auto& ops = kernels::active();
  const ModelSpec& model = *c.model;
  const VelocitySet& vset = *c.vset;
  const Field& planes = c.pl->data;
  int ms[2], nm = 0;
  for (int m = 0; m < vset.M; ++m)
    if (vset.active(m, d)) ms[nm++] = m;

  if (model.is_shallow_water()) {
    const double* rho = planes.plane(c.pl->i_rho);
    const double* u1 = planes.plane(c.pl->i_u1);
    const double* u2 = planes.plane(c.pl->i_u2);
    const double* r2 = planes.plane(c.pl->i_r2);
    for (int mi = 0; mi < nm; ++mi) {
      const int m = ms[mi];
      if (model.D == 1)
        ops.sw_ec_line_1d(rho + baseL, rho + baseR, u1 + baseL, u1 + baseR, r2 + baseL,
                          r2 + baseR, vset.v[m][d], vset.a[m], vset.b[m][0], model.kappa,
                          out[mi * 3 + 0], out[mi * 3 + 1], std::size_t(n_iface));
      else
        ops.sw_ec_line_2d(rho + baseL, rho + baseR, u1 + baseL, u1 + baseR, u2 + baseL,
                          u2 + baseR, r2 + baseL, r2 + baseR, vset.v[m][d], vset.a[m],
                          vset.b[m][0], vset.b[m][1], model.kappa, out[mi * 3 + 0],
                          out[mi * 3 + 1], out[mi * 3 + 2], std::size_t(n_iface));
    }
  } else {
    const double* V = planes.plane(c.pl->i_v);
    for (int mi = 0; mi < nm; ++mi) {
      const int m = ms[mi];
      const double* chi = planes.plane(c.pl->i_chi0 + m);
      const double* vf = planes.plane(c.pl->i_vf0 + m);
      ops.scalar_ec_line(V + baseL, V + baseR, chi + baseL, chi + baseR, vf + baseL,
                         vf + baseR, out[mi * 3 + 0], std::size_t(n_iface));
    }
  }

  if (c.scheme == SchemeKind::EC) return;

  // Dissipation is shared across velocities: D_m = D / M.
  const double w = 0.5 / vset.M;
  const long stepL = baseR - baseL;  // offset from a cell to its d-neighbor
  if (model.is_scalar()) {
    const double* V = planes.plane(c.pl->i_v);
    const double* uc = c.u->plane(0);
    for (int k = 0; k < n_iface; ++k) {
      const long l = baseL + k, r = baseR + k;
      const double jp = V[l] - V[l - stepL];
      const double jc = V[r] - V[l];
      const double jn = V[r + stepL] - V[r];
      const Vec ubar{0.5 * (uc[l] + uc[r]), 0, 0};
      Pos x;
      if (d == 0)
        x = {x_first + k * dx_along, x_transverse};
      else
        x = {x_transverse, x_first + k * dx_along};
      const double lam = model.wave_speed_dir(ubar, x, d);
      const double delta = w * es_delta_scalar(c.scheme, lam, jp, jc, jn);
      for (int mi = 0; mi < nm; ++mi) out[mi * 3 + 0][k] -= delta;
    }
  } else {
    const int p = model.p;
    const double* rho = planes.plane(c.pl->i_rho);
    const double* u1 = planes.plane(c.pl->i_u1);
    const double* u2 = planes.plane(c.pl->i_u2);
    const double* v1 = planes.plane(c.pl->i_v1);
    for (int k = 0; k < n_iface; ++k) {
      const long l = baseL + k, r = baseR + k;
      Vec jp{v1[l] - v1[l - stepL], u1[l] - u1[l - stepL], 0};
      Vec jc{v1[r] - v1[l], u1[r] - u1[l], 0};
      Vec jn{v1[r + stepL] - v1[r], u1[r + stepL] - u1[r], 0};
      if (p == 3) {
        jp[2] = u2[l] - u2[l - stepL];
        jc[2] = u2[r] - u2[l];
        jn[2] = u2[r + stepL] - u2[r];
      }
      const double rb = 0.5 * (rho[l] + rho[r]);
      const double u1b = 0.5 * (u1[l] + u1[r]);
      const double u2b = p == 3 ? 0.5 * (u2[l] + u2[r]) : 0.0;
      const Vec delta = es_delta_sw(c.scheme, model.D, d, rb, u1b, u2b, jp, jc, jn);
      for (int mi = 0; mi < nm; ++mi)
        for (int cc = 0; cc < p; ++cc) out[mi * 3 + cc][k] -= w * delta[cc];
    }
  }
}

void sweep_dir0(const SweepContext& c) {
  const Grid& g = c.u->grid();
  const int n0 = g.n[0];
  const int n_iface = n0 + 1;
  const double invdx = 1.0 / g.dx(0);
  const ModelSpec& model = *c.model;
  const VelocitySet& vset = *c.vset;
  int ms[2], nm = 0;
  for (int m = 0; m < vset.M; ++m)
    if (vset.active(m, 0)) ms[nm++] = m;

  parallel_for(g.ny(), [&](int r0, int r1) {
    std::vector<std::vector<double>> buf(nm * 3, std::vector<double>(n_iface));
    std::vector<double*> out(nm * 3);
    for (int i = 0; i < nm * 3; ++i) out[i] = buf[i].data();
    for (int iy = r0; iy < r1; ++iy) {
      const long baseL = c.u->index(-1, iy);
      const long baseR = c.u->index(0, iy);
      const double ycen = g.dim == 2 ? g.center(1, iy) : 0.0;
      flux_line(c, 0, baseL, baseR, n_iface, g.lo[0], g.dx(0), ycen, out);
      for (int mi = 0; mi < nm; ++mi) {
        Field& rhs = c.rhs->f[ms[mi]];
        for (int cc = 0; cc < model.p; ++cc) {
          double* row = rhs.plane(cc) + rhs.index(0, iy);
          const double* f = out[mi * 3 + cc];
          for (int ix = 0; ix < n0; ++ix) row[ix] -= (f[ix + 1] - f[ix]) * invdx;
        }
      }
    }
  });
}

void sweep_dir1(const SweepContext& c) {
  const Grid& g = c.u->grid();
  const int n0 = g.n[0];
  const int n1 = g.n[1];
  const double invdx = 1.0 / g.dx(1);
  const ModelSpec& model = *c.model;
  const VelocitySet& vset = *c.vset;
  int ms[2], nm = 0;
  for (int m = 0; m < vset.M; ++m)
    if (vset.active(m, 1)) ms[nm++] = m;

  parallel_for(n1, [&](int r0, int r1) {
    // two interface-row buffers per velocity/component, swapped as rows advance
    std::vector<std::vector<double>> bufA(nm * 3, std::vector<double>(n0));
    std::vector<std::vector<double>> bufB(nm * 3, std::vector<double>(n0));
    std::vector<double*> prev(nm * 3), cur(nm * 3);
    for (int i = 0; i < nm * 3; ++i) {
      prev[i] = bufA[i].data();
      cur[i] = bufB[i].data();
    }
    auto iface = [&](int j, std::vector<double*>& out) {
      const long baseL = c.u->index(0, j);
      const long baseR = c.u->index(0, j + 1);
      flux_line(c, 1, baseL, baseR, n0, g.lo[0] + 0.5 * g.dx(0), g.dx(0),
                g.lo[1] + (j + 1) * g.dx(1), out);
    };
    iface(r0 - 1, prev);
    for (int iy = r0; iy < r1; ++iy) {
      iface(iy, cur);
      for (int mi = 0; mi < nm; ++mi) {
        Field& rhs = c.rhs->f[ms[mi]];
        for (int cc = 0; cc < model.p; ++cc) {
          double* row = rhs.plane(cc) + rhs.index(0, iy);
          const double* ftop = cur[mi * 3 + cc];
          const double* fbot = prev[mi * 3 + cc];
          for (int ix = 0; ix < n0; ++ix) row[ix] -= (ftop[ix] - fbot[ix]) * invdx;
        }
      }
      std::swap(prev, cur);
    }
  });
}

}  // namespace

void precompute_planes(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                       DerivedPlanes& planes) {
  if (model.is_shallow_water())
    precompute_sw(model, u, planes);
  else
    precompute_scalar(model, vset, u, planes);
}

void compute_rhs(const ModelSpec& model, const VelocitySet& vset, const Field& u,
                 SchemeKind scheme, DerivedPlanes& planes, KineticField& rhs) {
  precompute_planes(model, vset, u, planes);
  for (int m = 0; m < vset.M; ++m) rhs.f[m].fill(0.0);
  SweepContext c{&model, &vset, &u, &planes, scheme, &rhs};
  sweep_dir0(c);
  if (model.D == 2) sweep_dir1(c);
}

KineticField semi_discrete_rhs(const ModelSpec& model, const VelocitySet& vset,
                               const KineticField& kf, SchemeKind scheme) {
  Field u = moments(kf);
  DerivedPlanes planes = make_planes(model, vset, u.grid());
  KineticField rhs = make_kinetic_field(u.grid(), vset.M, model.p);
  compute_rhs(model, vset, u, scheme, planes, rhs);
  return rhs;
}

}  // namespace veckin
