#include "veckin/grid.hpp"

#include <cmath>
#include <cstring>

namespace veckin {

Grid Grid::make1d(int nx, double lo_, double hi_) {
  if (nx < 4) throw domain_error("grid: need at least 4 cells per direction");
  if (!(hi_ > lo_)) throw domain_error("grid: empty interval");
  Grid g;
  g.dim = 1;
  g.n = {nx, 1};
  g.lo = {lo_, 0.0};
  g.hi = {hi_, 1.0};
  return g;
}

Grid Grid::make2d(int nx, int ny, double lo1, double hi1, double lo2, double hi2) {
  if (nx < 4 || ny < 4) throw domain_error("grid: need at least 4 cells per direction");
  if (!(hi1 > lo1) || !(hi2 > lo2)) throw domain_error("grid: empty interval");
  Grid g;
  g.dim = 2;
  g.n = {nx, ny};
  g.lo = {lo1, lo2};
  g.hi = {hi1, hi2};
  return g;
}

bool operator==(const Grid& a, const Grid& b) {
  return a.dim == b.dim && a.n == b.n && a.lo == b.lo && a.hi == b.hi;
}

Field::Field(const Grid& g, int comps) : grid_(g), p_(comps) {
  nxt_ = g.n[0] + 2 * Grid::ghost;
  nyt_ = g.dim == 2 ? g.n[1] + 2 * Grid::ghost : 1;
  goff_y_ = g.dim == 2 ? Grid::ghost : 0;
  data_.assign(std::size_t(plane_size()) * p_, 0.0);
}

bool Field::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

void Field::fill(double v) { data_.assign(data_.size(), v); }

namespace {

void wrap_x(Field& f) {
  const Grid& g = f.grid();
  const int n = g.n[0];
  const int y0 = g.dim == 2 ? -Grid::ghost : 0;
  const int y1 = g.dim == 2 ? g.n[1] + Grid::ghost : 1;
  for (int c = 0; c < f.comps(); ++c)
    for (int iy = y0; iy < y1; ++iy)
      for (int k = 1; k <= Grid::ghost; ++k) {
        f.at(c, -k, iy) = f.at(c, n - k, iy);
        f.at(c, n - 1 + k, iy) = f.at(c, k - 1, iy);
      }
}

void wrap_y(Field& f) {
  const Grid& g = f.grid();
  const int n = g.n[1];
  for (int c = 0; c < f.comps(); ++c)
    for (int k = 1; k <= Grid::ghost; ++k)
      for (int ix = -Grid::ghost; ix < g.n[0] + Grid::ghost; ++ix) {
        f.at(c, ix, -k) = f.at(c, ix, n - k);
        f.at(c, ix, n - 1 + k) = f.at(c, ix, k - 1);
      }
}

void copy_ghost_frame(Field& dst, const Field& src) {
  const Grid& g = dst.grid();
  for (int c = 0; c < dst.comps(); ++c) {
    for (int iy = (g.dim == 2 ? -Grid::ghost : 0);
         iy < (g.dim == 2 ? g.n[1] + Grid::ghost : 1); ++iy)
      for (int ix = -Grid::ghost; ix < g.n[0] + Grid::ghost; ++ix) {
        const bool interior = ix >= 0 && ix < g.n[0] &&
                              (g.dim == 1 || (iy >= 0 && iy < g.n[1]));
        if (!interior) dst.at(c, ix, iy) = src.at(c, ix, iy);
      }
  }
}

}  // namespace

void apply_bc_inplace(Field& field, BoundaryKind kind, const Field* frozen) {
  if (kind == BoundaryKind::FixedFromInitial) {
    if (!frozen) throw domain_error("apply_bc: FixedFromInitial requires frozen field");
    if (!(frozen->grid() == field.grid()) || frozen->comps() != field.comps())
      throw shape_error("apply_bc: frozen field shape mismatch");
    copy_ghost_frame(field, *frozen);
    return;
  }
  wrap_x(field);
  if (field.grid().dim == 2) wrap_y(field);
}

Field apply_bc(Field field, BoundaryKind kind, const Field* frozen) {
  apply_bc_inplace(field, kind, frozen);
  return field;
}

}  // namespace veckin
