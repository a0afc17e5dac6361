#include "veckin/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace veckin {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw io_error("cannot write " + path);
  return f;
}

}  // namespace

void write_solution_csv(const std::string& path, const Field& u) {
  std::ofstream f = open_out(path);
  const Grid& g = u.grid();
  f << "x";
  if (g.dim == 2) f << ",y";
  for (int c = 0; c < u.comps(); ++c) f << ",comp_" << c;
  f << "\n";
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.n[0]; ++ix) {
      f << format_g17(g.center(0, ix));
      if (g.dim == 2) f << ',' << format_g17(g.center(1, iy));
      for (int c = 0; c < u.comps(); ++c) f << ',' << format_g17(u.at(c, ix, iy));
      f << "\n";
    }
  if (!f) throw io_error("write failed: " + path);
}

void write_entropy_csv(const std::string& path, const EntropyReport& report,
                       int report_every) {
  std::ofstream f = open_out(path);
  const int M = report.M;
  f << "t,eta_mean";
  for (int m = 1; m <= M; ++m) f << ",H_" << m;
  f << ",signed_eta,abs_eta";
  for (int m = 1; m <= M; ++m) f << ",signed_H_" << m;
  for (int m = 1; m <= M; ++m) f << ",abs_H_" << m;
  f << "\n";
  const long n = long(report.samples.size());
  for (long i = 0; i < n; ++i) {
    if (i % report_every != 0 && i != n - 1) continue;
    const EntropySample& s = report.samples[i];
    f << format_g17(s.t) << ',' << format_g17(s.eta_mean);
    for (int m = 0; m < M; ++m) f << ',' << format_g17(s.h_mean[m]);
    f << ',' << format_g17(s.eta_signed) << ',' << format_g17(s.eta_abs);
    for (int m = 0; m < M; ++m) f << ',' << format_g17(s.h_signed[m]);
    for (int m = 0; m < M; ++m) f << ',' << format_g17(s.h_abs[m]);
    f << "\n";
  }
  if (!f) throw io_error("write failed: " + path);
}

void write_eoc_csv(const std::string& path, const EocTable& table) {
  std::ofstream f = open_out(path);
  f << "n,dx,l2,order\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const EocRow& r = table[i];
    // combined norm over components
    double l2 = 0.0;
    for (int c = 0; c < r.comps; ++c) l2 += r.l2[c] * r.l2[c];
    l2 = std::sqrt(l2);
    f << r.n_cells << ',' << format_g17(r.dx) << ',' << format_g17(l2) << ',';
    if (i > 0) {
      double prev = 0.0;
      for (int c = 0; c < r.comps; ++c)
        prev += table[i - 1].l2[c] * table[i - 1].l2[c];
      prev = std::sqrt(prev);
      f << format_g17(std::log(prev / l2) / std::log(table[i - 1].dx / r.dx));
    }
    f << "\n";
  }
  if (!f) throw io_error("write failed: " + path);
}

void write_audit_csv(const std::string& path, const std::vector<AuditRow>& rows) {
  std::ofstream f = open_out(path);
  f << "check,value,threshold,pass\n";
  for (const AuditRow& r : rows)
    f << r.check << ',' << format_g17(r.value) << ',' << format_g17(r.threshold) << ','
      << (r.pass ? "1" : "0") << "\n";
  if (!f) throw io_error("write failed: " + path);
}

}  // namespace veckin
