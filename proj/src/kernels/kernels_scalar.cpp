#include <cmath>

#include "veckin/kernels.hpp"

namespace veckin::kernels {
namespace {

void triad(double a, const double* xa, double b, const double* xb, double c,
           const double* xc, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * xa[i] + b * xb[i] + c * xc[i];
}

void acc(double* y, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += x[i];
}

void add2(const double* x1, const double* x2, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x1[i] + x2[i];
}

void scalar_ec_line(const double* VL, const double* VR, const double* chiL,
                    const double* chiR, const double* vfL, const double* vfR,
                    double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double jump = VR[i] - VL[i];
    const double tie = 1e-12 * (1.0 + std::fabs(VL[i]) + std::fabs(VR[i]));
    if (std::fabs(jump) > tie) {
      out[i] = (chiR[i] - chiL[i]) / jump;
    } else {
      out[i] = 0.5 * (vfL[i] + vfR[i]);
    }
  }
}

void sw_ec_line_1d(const double* rhoL, const double* rhoR, const double* u1L,
                   const double* u1R, const double* r2L, const double* r2R, double v,
                   double a, double b1, double kappa, double* f0, double* f1,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double rb = 0.5 * (rhoL[i] + rhoR[i]);
    const double u1b = 0.5 * (u1L[i] + u1R[i]);
    const double r2b = 0.5 * (r2L[i] + r2R[i]);
    const double phi = a + b1 * u1b;
    f0[i] = v * (rb * phi);
    f1[i] = v * (rb * u1b * phi + kappa * b1 * r2b);
  }
}

void sw_ec_line_2d(const double* rhoL, const double* rhoR, const double* u1L,
                   const double* u1R, const double* u2L, const double* u2R,
                   const double* r2L, const double* r2R, double v, double a, double b1,
                   double b2, double kappa, double* f0, double* f1, double* f2,
                   std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double rb = 0.5 * (rhoL[i] + rhoR[i]);
    const double u1b = 0.5 * (u1L[i] + u1R[i]);
    const double u2b = 0.5 * (u2L[i] + u2R[i]);
    const double r2b = 0.5 * (r2L[i] + r2R[i]);
    const double phi = a + (b1 * u1b + b2 * u2b);
    f0[i] = v * (rb * phi);
    f1[i] = v * (rb * u1b * phi + kappa * b1 * r2b);
    f2[i] = v * (rb * u2b * phi + kappa * b2 * r2b);
  }
}

}  // namespace

const Ops scalar_ops = {triad, acc,           add2,          scalar_ec_line,
                        sw_ec_line_1d, sw_ec_line_2d, "scalar"};

}  // namespace veckin::kernels
