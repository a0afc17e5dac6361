#include "veckin/cases.hpp"

#include <cmath>

namespace veckin {

namespace {

double vortex_k(double q) {
  return 2.0 * std::cos(q) + 2.0 * q * std::sin(q) + 0.125 * std::cos(2.0 * q) +
         0.25 * q * std::sin(2.0 * q) + 0.75 * q * q;
}

Vec vortex_ic(const Pos& x) {
  const double rc =
      4.0 * M_PI * std::sqrt((x[0] - 0.5) * (x[0] - 0.5) + (x[1] - 0.5) * (x[1] - 0.5));
  const double drc = rc < M_PI ? 1.0 : 0.0;
  const double amp = 1.5;
  const double rho =
      110.0 + (0.64 * (amp / (4.0 * M_PI)) * (amp / (4.0 * M_PI))) * drc *
                  (vortex_k(rc) - vortex_k(M_PI));
  const double swirl = amp * (1.0 + std::cos(rc)) * drc;
  const double u1 = 0.6 + swirl * (0.5 - x[1]);
  const double u2 = swirl * (x[0] - 0.5);
  return Vec{rho, rho * u1, rho * u2};
}

Vec rotation_hump_ic(const Pos& x) {
  const double r0 = 0.25;
  const double r = std::sqrt(x[0] * x[0] + (x[1] - 0.5) * (x[1] - 0.5));
  if (r >= r0) return Vec{0.0, 0, 0};
  const double c = std::cos(M_PI * r / (2.0 * r0));
  return Vec{c * c * c * c, 0, 0};
}

}  // namespace

std::vector<std::string> case_names() {
  return {"advection",    "rotation",  "burgers",   "sw-expansion",
          "sw-dambreak",  "sw-periodic", "sw-vortex", "sw-cyl-dambreak"};
}

CaseConfig build_case(const std::string& name) {
  CaseConfig c;
  c.name = name;
  if (name == "advection") {
    c.model = make_scalar_model(ScalarModelKind::Advection1D);
    c.grid = Grid::make1d(256, 0.0, 2.0 * M_PI);
    c.initial = [](const Pos& x) {
      const double s = std::sin(x[0]);
      return Vec{s * s * s * s, 0, 0};
    };
    c.bc = BoundaryKind::Periodic;
    c.scheme = SchemeKind::EC;
    c.cfl = 0.1;
    c.t_end = 2.0 * M_PI;
    c.reference = ReferenceKind::Exact;
    c.exact = advection_exact;
    c.eoc_grids = {32, 64, 128, 256};
  } else if (name == "rotation") {
    c.model = make_scalar_model(ScalarModelKind::Rotation2D);
    c.grid = Grid::make2d(256, 256, -1.0, 1.0, -0.5, 1.5);
    c.initial = rotation_hump_ic;
    c.bc = BoundaryKind::FixedFromInitial;
    c.scheme = SchemeKind::EC;
    c.cfl = 0.9;
    c.t_end = 0.5;
    c.reference = ReferenceKind::None;
  } else if (name == "burgers") {
    c.model = make_scalar_model(ScalarModelKind::Burgers1D);
    c.grid = Grid::make1d(256, 0.0, 1.0);
    c.initial = [](const Pos& x) { return Vec{std::sin(2.0 * M_PI * x[0]), 0, 0}; };
    c.bc = BoundaryKind::Periodic;
    c.scheme = SchemeKind::EC;
    c.cfl = 0.1;
    c.t_end = 0.1 / (2.0 * M_PI);
    c.reference = ReferenceKind::Exact;
    c.exact = [](double x, double t) { return burgers_exact(x, t); };
    c.eoc_grids = {64, 128, 256};
  } else if (name == "sw-expansion") {
    c.model = make_sw_model(1);
    c.grid = Grid::make1d(128, -1.0, 1.0);
    c.initial = [](const Pos& x) {
      const double u = x[0] < 0.0 ? -4.0 : 4.0;
      return Vec{1.0, u, 0};
    };
    c.bc = BoundaryKind::FixedFromInitial;
    c.scheme = SchemeKind::ES1;
    c.cfl = 0.1;
    c.t_end = 0.1;
    c.reference = ReferenceKind::None;
  } else if (name == "sw-dambreak") {
    c.model = make_sw_model(1);
    c.grid = Grid::make1d(128, -1.0, 1.0);
    c.initial = [](const Pos& x) {
      const double rho = x[0] < 0.0 ? 15.0 : 1.0;
      return Vec{rho, 0.0, 0};
    };
    c.bc = BoundaryKind::FixedFromInitial;
    c.scheme = SchemeKind::ES1;
    c.cfl = 0.4;
    c.t_end = 0.15;
    c.reference = ReferenceKind::None;
  } else if (name == "sw-periodic") {
    c.model = make_sw_model(2);
    c.grid = Grid::make2d(256, 256, 0.0, 1.0, 0.0, 1.0);
    c.initial = [](const Pos& x) {
      const double s = std::sin(2.0 * M_PI * (x[0] + x[1]));
      const double rho = 1.0 + s * s;
      const double u = std::sin(2.0 * M_PI * (x[0] - x[1]));
      return Vec{rho, rho * u, rho * u};
    };
    c.bc = BoundaryKind::Periodic;
    c.scheme = SchemeKind::EC;
    c.cfl = 0.5;
    c.t_end = 0.1;
    c.reference = ReferenceKind::SelfConvergence;
    c.eoc_grids = {32, 64, 128, 256};
    c.reference_cells = 512;
  } else if (name == "sw-vortex") {
    c.model = make_sw_model(2);
    c.grid = Grid::make2d(256, 256, 0.0, 1.0, 0.0, 1.0);
    c.initial = vortex_ic;
    c.bc = BoundaryKind::Periodic;
    c.scheme = SchemeKind::EC;
    c.cfl = 0.5;
    c.t_end = 0.1;
    c.reference = ReferenceKind::SelfConvergence;
    c.eoc_grids = {32, 64, 128};
    c.reference_cells = 256;
  } else if (name == "sw-cyl-dambreak") {
    c.model = make_sw_model(2);
    c.grid = Grid::make2d(100, 100, -1.0, 1.0, -1.0, 1.0);
    c.initial = [](const Pos& x) {
      const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
      const double rho = r < 0.5 ? 2.0 : 1.0;
      return Vec{rho, 0.0, 0.0};
    };
    c.bc = BoundaryKind::Periodic;
    c.scheme = SchemeKind::ES1;
    c.cfl = 0.4;
    c.t_end = 0.2;
    c.reference = ReferenceKind::None;
  } else {
    throw lookup_error("unknown case: " + name);
  }
  return c;
}

Grid case_grid(const CaseConfig& c, int nx, int ny) {
  const Grid& g = c.grid;
  if (g.dim == 1) return Grid::make1d(nx, g.lo[0], g.hi[0]);
  return Grid::make2d(nx, ny > 0 ? ny : nx, g.lo[0], g.hi[0], g.lo[1], g.hi[1]);
}

Field sample_initial(const CaseConfig& c, const Grid& g) {
  Field f(g, c.model.p);
  const int y0 = g.dim == 2 ? -Grid::ghost : 0;
  const int y1 = g.dim == 2 ? g.n[1] + Grid::ghost : 1;
  for (int iy = y0; iy < y1; ++iy)
    for (int ix = -Grid::ghost; ix < g.n[0] + Grid::ghost; ++ix) {
      const Pos x{g.center(0, ix), g.dim == 2 ? g.center(1, iy) : 0.0};
      f.set_state(ix, iy, c.initial(x));
    }
  return f;
}

}  // namespace veckin
