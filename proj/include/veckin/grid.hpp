#pragma once

#include <vector>

#include "veckin/core.hpp"

namespace veckin {

// Structured uniform grid, 1D or 2D, cell-centered collocation on the
// half-open box [lo, hi). Ghost width 2 covers every stencil in use.
struct Grid {
  int dim = 1;
  std::array<int, 2> n{4, 1};
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};
  static constexpr int ghost = 2;

  double dx(int d) const { return (hi[d] - lo[d]) / n[d]; }
  double min_dx() const { return dim == 2 ? std::min(dx(0), dx(1)) : dx(0); }
  double center(int d, int i) const { return lo[d] + (i + 0.5) * dx(d); }
  double cell_volume() const { return dim == 2 ? dx(0) * dx(1) : dx(0); }
  long cells() const { return long(n[0]) * (dim == 2 ? n[1] : 1); }
  int ny() const { return dim == 2 ? n[1] : 1; }

  static Grid make1d(int nx, double lo, double hi);
  static Grid make2d(int nx, int ny, double lo1, double hi1, double lo2, double hi2);
};

bool operator==(const Grid& a, const Grid& b);

// Cell-centered field with p components stored as separate planes
// (component-major), including the ghost frame.
class Field {
 public:
  Field() = default;
  Field(const Grid& g, int comps);

  const Grid& grid() const { return grid_; }
  int comps() const { return p_; }
  int nx_tot() const { return nxt_; }
  int ny_tot() const { return nyt_; }
  long plane_size() const { return long(nxt_) * nyt_; }

  double* plane(int c) { return data_.data() + c * plane_size(); }
  const double* plane(int c) const { return data_.data() + c * plane_size(); }

  // ix in [-ghost, n1+ghost); iy likewise in 2D, must be 0 in 1D.
  long index(int ix, int iy = 0) const {
    return long(iy + goff_y_) * nxt_ + (ix + Grid::ghost);
  }
  double& at(int c, int ix, int iy = 0) { return plane(c)[index(ix, iy)]; }
  double at(int c, int ix, int iy = 0) const { return plane(c)[index(ix, iy)]; }

  Vec state(int ix, int iy = 0) const {
    Vec u{0, 0, 0};
    const long k = index(ix, iy);
    for (int c = 0; c < p_; ++c) u[c] = plane(c)[k];
    return u;
  }
  void set_state(int ix, int iy, const Vec& u) {
    const long k = index(ix, iy);
    for (int c = 0; c < p_; ++c) plane(c)[k] = u[c];
  }

  bool all_finite() const;
  void fill(double v);

 private:
  Grid grid_;
  int p_ = 0;
  int nxt_ = 0, nyt_ = 0, goff_y_ = 0;
  std::vector<double> data_;
};

enum class BoundaryKind { Periodic, FixedFromInitial };

// Fills the ghost frame; interior untouched. Periodic wraps per direction
// (direction 1 first, then direction 2 over full rows, which also defines the
// corners); FixedFromInitial copies the ghost frame from `frozen`.
Field apply_bc(Field field, BoundaryKind kind, const Field* frozen = nullptr);
void apply_bc_inplace(Field& field, BoundaryKind kind, const Field* frozen = nullptr);

}  // namespace veckin
