#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace veckin {

// State vectors are at most 3 components (scalar laws p=1, shallow water p=2/3).
using Vec = std::array<double, 3>;
using Mat = std::array<std::array<double, 3>, 3>;  // row-major
using Pos = std::array<double, 2>;

inline double dot(const Vec& a, const Vec& b, int p) {
  double s = 0.0;
  for (int i = 0; i < p; ++i) s += a[i] * b[i];
  return s;
}

inline Vec matvec(const Mat& m, const Vec& x, int p) {
  Vec y{0, 0, 0};
  for (int r = 0; r < p; ++r) {
    double s = 0.0;
    for (int c = 0; c < p; ++c) s += m[r][c] * x[c];
    y[r] = s;
  }
  return y;
}

inline Vec matvec_t(const Mat& m, const Vec& x, int p) {
  Vec y{0, 0, 0};
  for (int c = 0; c < p; ++c) {
    double s = 0.0;
    for (int r = 0; r < p; ++r) s += m[r][c] * x[r];
    y[c] = s;
  }
  return y;
}

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct shape_error : error { using error::error; };
struct domain_error : error { using error::error; };
struct positivity_error : error { using error::error; };
struct convergence_error : error { using error::error; };
struct numerical_error : error { using error::error; };
struct blowup_error : error { using error::error; };
struct lookup_error : error { using error::error; };
struct io_error : error { using error::error; };
struct usage_error : error { using error::error; };

}  // namespace veckin
