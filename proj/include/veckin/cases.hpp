#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "veckin/integrator.hpp"

namespace veckin {

enum class ReferenceKind { Exact, SelfConvergence, None };

struct CaseConfig {
  std::string name;
  ModelSpec model;
  Grid grid;  // default grid
  std::function<Vec(const Pos&)> initial;
  BoundaryKind bc = BoundaryKind::Periodic;
  SchemeKind scheme = SchemeKind::EC;
  double cfl = 0.5;
  double t_end = 0.0;
  ReferenceKind reference = ReferenceKind::None;
  std::vector<int> eoc_grids;  // cells per direction
  int reference_cells = 0;     // self-convergence reference grid (per direction)
  // exact solution at (x, t); only for ReferenceKind::Exact
  std::function<double(double, double)> exact;
};

CaseConfig build_case(const std::string& name);
std::vector<std::string> case_names();

// Grid with the case's domain and n cells per direction.
Grid case_grid(const CaseConfig& c, int nx, int ny = 0);

// Samples the initial condition at cell centers, ghosts included.
Field sample_initial(const CaseConfig& c, const Grid& g);

}  // namespace veckin
