#pragma once

#include <functional>
#include <string>

#include "veckin/core.hpp"

namespace veckin {

enum class ModelKind { Advection1D, Rotation2D, Burgers1D, ShallowWater1D, ShallowWater2D };

inline constexpr double kSwKappa = 0.5;  // p = kappa*rho^2, g = 2*kappa

// Shallow-water state in primitive form (depth + velocities).
struct SWState {
  double rho = 1.0;
  std::array<double, 2> u{0.0, 0.0};
  double pressure() const { return kSwKappa * rho * rho; }
};

// A conservation law with its entropy machinery. The function members are the
// generic contract; hot paths switch on `kind` instead.
struct ModelSpec {
  ModelKind kind = ModelKind::Advection1D;
  int p = 1;
  int D = 1;
  std::string name;
  double kappa = 0.0;  // nonzero for shallow water

  std::function<Vec(const Vec&, const Pos&, int)> flux;               // G^(d)(U, x)
  std::function<double(const Vec&)> entropy;                          // eta(U)
  std::function<double(const Vec&, const Pos&, int)> entropy_flux;    // omega^(d)(U, x)
  std::function<Vec(const Vec&)> entropy_variable;                    // V(U)
  std::function<double(const Vec&, const Pos&, int)> entropy_potential;  // psi^(d)(U, x)
  std::function<double(const Vec&, const Pos&)> max_wave_speed;       // max over d
  std::function<double(const Vec&, const Pos&, int)> wave_speed_dir;  // |eig dG^(d)| max
  bool has_eigen_basis = false;

  bool is_scalar() const { return p == 1; }
  bool is_shallow_water() const {
    return kind == ModelKind::ShallowWater1D || kind == ModelKind::ShallowWater2D;
  }
};

enum class ScalarModelKind { Advection1D, Rotation2D, Burgers1D };

ModelSpec make_scalar_model(ScalarModelKind kind);
ModelSpec make_sw_model(int D);

// Barth-scaled eigenbasis of dG^(d)/dU at the given state: columns of R are
// eigenvectors scaled so R*R^T = dU/dV, Lambda holds |eigenvalues|.
void sw_eigen_basis(const SWState& ubar, int D, int d, Mat& R, Vec& lambda);

// Exact pre-shock solution of the Burgers benchmark (U0 = sin(2 pi x)): solves
// U = sin(2 pi (x - U t)) by Newton with bisection fallback.
double burgers_exact(double x, double t, double tol = 1e-15);

// Exact solution of the advection benchmark: sin^4(x - t).
double advection_exact(double x, double t);

}  // namespace veckin
