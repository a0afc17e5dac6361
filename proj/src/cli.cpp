#include "veckin/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>

namespace veckin {

RunManifest parse_args(const std::vector<std::string>& args) {
  RunManifest m;
  CLI::App app{"vector-kinetic entropy conserving/stable finite volume solver"};
  app.require_subcommand(1);

  std::string scheme, policy = "per-step", norm = "volume";

  auto add_common = [&](CLI::App* sub, bool need_case) {
    auto* c = sub->add_option("--case", m.case_name, "benchmark case name");
    if (need_case) c->required();
    sub->add_option("--out", m.out_dir, "output directory");
  };
  auto add_run_opts = [&](CLI::App* sub) {
    sub->add_option("--scheme", scheme, "ec|es1|es2|es2-limited");
    sub->add_option("--nx", m.nx, "cells in direction 1");
    sub->add_option("--ny", m.ny, "cells in direction 2");
    sub->add_option("--cfl", m.cfl, "CFL number");
    sub->add_option("--tend", m.t_end, "end time");
    sub->add_option("--lambda-policy", policy, "per-step|frozen");
    sub->add_option("--lambda-safety", m.lambda_safety, "lambda safety factor");
  };

  CLI::App* run = app.add_subcommand("run", "integrate one case and write reports");
  add_common(run, true);
  add_run_opts(run);
  run->add_option("--report-every", m.report_every, "entropy report cadence");
  run->add_flag("--audit", m.audit, "run invariant audits after the run");

  CLI::App* eoc = app.add_subcommand("eoc", "grid-refinement study");
  add_common(eoc, true);
  add_run_opts(eoc);
  eoc->add_option("--grids", m.grids, "comma-separated cell counts")
      ->required()
      ->delimiter(',');
  eoc->add_option("--norm", norm, "volume|scaled");

  CLI::App* audit = app.add_subcommand("audit", "randomized invariant audits");
  add_common(audit, true);
  audit->add_option("--pairs", m.audit_pairs, "random interface pairs");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw usage_error(e.what());
  }

  if (run->parsed()) m.mode = RunManifest::Mode::Run;
  if (eoc->parsed()) m.mode = RunManifest::Mode::Eoc;
  if (audit->parsed()) m.mode = RunManifest::Mode::Audit;
  if (!scheme.empty()) m.scheme = scheme_from_name(scheme);
  if (policy == "per-step")
    m.lambda_policy = LambdaPolicy::PerStep;
  else if (policy == "frozen")
    m.lambda_policy = LambdaPolicy::Frozen;
  else
    throw usage_error("unknown lambda policy: " + policy);
  if (norm == "scaled")
    m.scaled_norm = true;
  else if (norm != "volume")
    throw usage_error("unknown norm: " + norm);
  if (m.report_every < 1) throw usage_error("--report-every must be >= 1");
  if (!(m.lambda_safety > 1.0)) throw usage_error("--lambda-safety must exceed 1");
  return m;
}

StepConfig step_config(const CaseConfig& c, const RunManifest& m) {
  StepConfig cfg;
  cfg.scheme = m.scheme.value_or(c.scheme);
  cfg.cfl = m.cfl.value_or(c.cfl);
  cfg.t_end = m.t_end.value_or(c.t_end);
  cfg.bc = c.bc;
  cfg.lambda_policy = m.lambda_policy;
  cfg.lambda_safety = m.lambda_safety;
  return cfg;
}

RunResult run_case(const CaseConfig& c, const Grid& g, const StepConfig& cfg) {
  const Field init = sample_initial(c, g);
  return run(c.model, g, init, init, cfg);
}

Field exact_reference(const CaseConfig& c, const Grid& g, double t) {
  if (c.reference != ReferenceKind::Exact || !c.exact)
    throw domain_error("exact_reference: case has no exact solution");
  Field f(g, 1);
  for (int ix = 0; ix < g.n[0]; ++ix) f.at(0, ix, 0) = c.exact(g.center(0, ix), t);
  return f;
}

EocResult run_eoc(const CaseConfig& c, const std::vector<int>& grids,
                  const StepConfig& cfg) {
  if (grids.size() < 2) throw domain_error("eoc: need at least 2 grids");
  StepConfig quiet = cfg;
  quiet.record_entropy = false;

  Field reference_fine;
  if (c.reference == ReferenceKind::SelfConvergence) {
    const Grid gref = case_grid(c, c.reference_cells, c.reference_cells);
    reference_fine = run_case(c, gref, quiet).state.u;
  } else if (c.reference == ReferenceKind::None) {
    throw domain_error("eoc: case has no reference solution");
  }

  std::vector<EocRow> vol_rows, sc_rows;
  for (int n : grids) {
    const Grid g = case_grid(c, n, n);
    RunResult r = run_case(c, g, quiet);
    Field ref;
    if (c.reference == ReferenceKind::Exact)
      ref = exact_reference(c, g, quiet.t_end);
    else
      ref = restrict_field(reference_fine, g);
    EocRow row;
    row.n_cells = g.cells();
    row.dx = g.dx(0);
    row.comps = c.model.p;
    row.l2 = l2_error(r.state.u, ref);
    vol_rows.push_back(row);
    row.l2 = l2_error_scaled(r.state.u, ref);
    sc_rows.push_back(row);
  }
  return EocResult{eoc(vol_rows), eoc(sc_rows)};
}

namespace {

double ulp_distance(double value, double target) {
  return std::fabs(value - target) / 2.220446049250313e-16;
}

Vec random_state(const ModelSpec& model, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  if (model.is_scalar()) return Vec{2.0 * un(rng), 0, 0};
  Vec u{0, 0, 0};
  u[0] = 0.1 + 4.9 * (0.5 * (un(rng) + 1.0));
  for (int j = 0; j < model.D; ++j) {
    const double vel = 3.0 * un(rng);
    u[1 + j] = u[0] * vel;
  }
  return u;
}

Pos random_pos(const ModelSpec& model, std::mt19937_64& rng) {
  if (model.kind != ModelKind::Rotation2D) return Pos{0.0, 0.0};
  std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(-0.5, 1.5);
  return Pos{ux(rng), uy(rng)};
}

}  // namespace

std::vector<AuditRow> run_audits(const CaseConfig& c, int npairs, unsigned seed) {
  const ModelSpec& model = c.model;
  std::mt19937_64 rng(seed);

  // states first, so the velocity set can respect the positivity bound
  std::vector<std::pair<Vec, Vec>> pairs(npairs);
  std::vector<Pos> xs(npairs);
  double sup = 0.0;
  for (int i = 0; i < npairs; ++i) {
    pairs[i] = {random_state(model, rng), random_state(model, rng)};
    xs[i] = random_pos(model, rng);
    sup = std::max(sup, model.max_wave_speed(pairs[i].first, xs[i]));
    sup = std::max(sup, model.max_wave_speed(pairs[i].second, xs[i]));
  }
  const double lambda = 1.5 * (model.D == 1 ? 1.0 : 2.0) * std::max(sup, 1e-8);
  const VelocitySet vset = build_velocity_set(model.D, lambda);

  double worst_kin = 0.0, worst_mac = 0.0, worst_maxw = 0.0, worst_hsum = 0.0;
  double worst_consistency = 0.0;
  for (int i = 0; i < npairs; ++i) {
    const Vec& ul = pairs[i].first;
    const Vec& ur = pairs[i].second;
    const Pos& x = xs[i];
    const Vec vl = model.entropy_variable(ul);
    const Vec vr = model.entropy_variable(ur);
    FluxRequest req;
    req.UL = ul;
    req.UR = ur;
    req.VL = vl;
    req.VR = vr;
    req.x = x;
    for (int cc = 0; cc < model.p; ++cc) req.jump_cur[cc] = vr[cc] - vl[cc];
    const auto chi_l = chi_potential(model, vset, ul, x);
    const auto chi_r = chi_potential(model, vset, ur, x);
    for (int d = 0; d < model.D; ++d) {
      req.d = d;
      Vec total{0, 0, 0};
      for (int m = 0; m < vset.M; ++m) {
        req.m = m;
        Vec f{0, 0, 0};
        if (vset.active(m, d)) {
          if (model.is_scalar())
            f[0] = ec_flux_scalar(model, vset, req);
          else
            f = ec_flux_sw(vset, req, model.p);
        }
        for (int cc = 0; cc < model.p; ++cc) total[cc] += f[cc];
        const double jchi = chi_r[m][d] - chi_l[m][d];
        const double res = std::fabs(dot(req.jump_cur, f, model.p) - jchi);
        worst_kin = std::max(worst_kin, res / (1.0 + std::fabs(jchi)));
      }
      const double jpsi =
          model.entropy_potential(ur, x, d) - model.entropy_potential(ul, x, d);
      const double res_mac = std::fabs(dot(req.jump_cur, total, model.p) - jpsi);
      worst_mac = std::max(worst_mac, res_mac / (1.0 + std::fabs(jpsi)));

      // consistency at equal states
      FluxRequest same = req;
      same.UR = ul;
      same.VR = vl;
      for (int cc = 0; cc < model.p; ++cc) same.jump_cur[cc] = 0.0;
      for (int m = 0; m < vset.M; ++m) {
        if (!vset.active(m, d)) continue;
        same.m = m;
        Vec f{0, 0, 0};
        if (model.is_scalar())
          f[0] = ec_flux_scalar(model, vset, same);
        else
          f = ec_flux_sw(vset, same, model.p);
        const auto fm = maxwellian(model, vset, ul, x)[m];
        for (int cc = 0; cc < model.p; ++cc) {
          const double ref = vset.v[m][d] * fm[cc];
          worst_consistency =
              std::max(worst_consistency, std::fabs(f[cc] - ref) / (1.0 + std::fabs(ref)));
        }
      }
    }
    // maxwellian moment identities + entropy sum on the left state
    const auto fm = maxwellian(model, vset, ul, x);
    const auto hm = kinetic_entropy(model, vset, ul, x);
    for (int cc = 0; cc < model.p; ++cc) {
      double s = 0.0;
      for (int m = 0; m < vset.M; ++m) s += fm[m][cc];
      worst_maxw = std::max(worst_maxw, std::fabs(s - ul[cc]) / (1.0 + std::fabs(ul[cc])));
    }
    for (int d = 0; d < model.D; ++d) {
      const Vec gd = model.flux(ul, x, d);
      for (int cc = 0; cc < model.p; ++cc) {
        double s = 0.0;
        for (int m = 0; m < vset.M; ++m) s += vset.v[m][d] * fm[m][cc];
        worst_maxw = std::max(worst_maxw, std::fabs(s - gd[cc]) / (1.0 + std::fabs(gd[cc])));
      }
    }
    double hs = 0.0;
    for (int m = 0; m < vset.M; ++m) hs += hm[m];
    const double eta = model.entropy(ul);
    worst_hsum = std::max(worst_hsum, std::fabs(hs - eta) / (1.0 + std::fabs(eta)));
  }

  // velocity-set moment constraints in ulps
  double worst_ulp = 0.0;
  {
    double sa = 0.0;
    for (int m = 0; m < vset.M; ++m) sa += vset.a[m];
    worst_ulp = std::max(worst_ulp, ulp_distance(sa, 1.0));
    for (int d = 0; d < model.D; ++d) {
      double sb = 0.0, sva = 0.0;
      for (int m = 0; m < vset.M; ++m) {
        sb += vset.b[m][d];
        sva += vset.v[m][d] * vset.a[m];
      }
      worst_ulp = std::max(worst_ulp, ulp_distance(sb, 0.0));
      worst_ulp = std::max(worst_ulp, ulp_distance(sva, 0.0));
      for (int j = 0; j < model.D; ++j) {
        double svb = 0.0;
        for (int m = 0; m < vset.M; ++m) svb += vset.v[m][j] * vset.b[m][d];
        worst_ulp = std::max(worst_ulp, ulp_distance(svb, j == d ? 1.0 : 0.0));
      }
    }
  }

  // sign property sweep
  std::uniform_real_distribution<double> un(-1.0, 1.0);
  long violations = 0;
  const int ntriples = 100000;
  for (int i = 0; i < ntriples; ++i) {
    const double wp = un(rng), w = un(rng), wn = un(rng);
    const double rec = w - 0.5 * (minmod(w, wn) + minmod(wp, w));
    if (w > 0.0 ? (rec < 0.0 || rec > w) : (rec > 0.0 || rec < w)) ++violations;
  }

  std::vector<AuditRow> rows;
  auto push = [&](const std::string& name, double value, double thr) {
    rows.push_back(AuditRow{name, value, thr, value <= thr});
  };
  push("ec_residual_kinetic_rel", worst_kin, 1e-11);
  push("ec_residual_macroscopic_rel", worst_mac, 1e-11);
  push("moment_sums_ulp", worst_ulp, 4.0);
  push("maxwellian_moments_rel", worst_maxw, 1e-13);
  push("kinetic_entropy_sum_rel", worst_hsum, 1e-14);
  push("flux_consistency_rel", worst_consistency, 0.0);
  push("sign_property_violations", double(violations), 0.0);
  return rows;
}

int run_manifest(const RunManifest& m) {
  const CaseConfig c = build_case(m.case_name);
  std::filesystem::create_directories(m.out_dir);

  if (m.mode == RunManifest::Mode::Audit) {
    const auto rows = run_audits(c, m.audit_pairs);
    write_audit_csv(m.out_dir + "/audit.csv", rows);
    bool ok = true;
    for (const auto& r : rows) {
      std::cout << (r.pass ? "pass " : "FAIL ") << r.check << " = " << r.value
                << " (threshold " << r.threshold << ")\n";
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }

  if (m.mode == RunManifest::Mode::Eoc) {
    const StepConfig cfg = step_config(c, m);
    const EocResult res = run_eoc(c, m.grids, cfg);
    const EocTable& t = m.scaled_norm ? res.scaled : res.volume;
    write_eoc_csv(m.out_dir + "/eoc.csv", t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::cout << "n=" << t[i].n_cells << " dx=" << t[i].dx;
      for (int cc = 0; cc < t[i].comps; ++cc) {
        std::cout << "  l2[" << cc << "]=" << t[i].l2[cc];
        if (i > 0) std::cout << " order=" << t[i].order[cc];
      }
      std::cout << "\n";
    }
    return 0;
  }

  // run mode
  Grid g = c.grid;
  if (m.nx) g = case_grid(c, *m.nx, m.ny.value_or(*m.nx));
  const StepConfig cfg = step_config(c, m);
  RunResult r = run_case(c, g, cfg);
  write_solution_csv(m.out_dir + "/solution.csv", r.state.u);
  write_entropy_csv(m.out_dir + "/entropy.csv", r.report, m.report_every);
  if (r.aborted) {
    std::cerr << "run aborted: " << r.abort_reason << "\n";
    return 1;
  }
  std::cout << "completed " << r.state.step << " steps to t=" << r.state.t << "\n";
  if (m.audit) {
    const auto rows = run_audits(c, m.audit_pairs);
    write_audit_csv(m.out_dir + "/audit.csv", rows);
    for (const auto& row : rows)
      if (!row.pass) return 1;
  }
  return 0;
}

}  // namespace veckin
