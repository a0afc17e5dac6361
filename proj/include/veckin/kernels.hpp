#pragma once

#include <cstddef>
#include <string_view>

namespace veckin::kernels {

// Hot inner loops of the solver. Every kernel has a scalar reference
// implementation and (on x86) an AVX2 variant selected at runtime; both use
// identical operation order and no FMA, so results are bitwise equal.
//
// Interface-flux kernels read left/right cell lines through separate base
// pointers: along direction 1 the two lines overlap (R = L + 1), along
// direction 2 they are adjacent grid rows.
struct Ops {
  // y[i] = a*xa[i] + b*xb[i] + c*xc[i]
  void (*triad)(double a, const double* xa, double b, const double* xb, double c,
                const double* xc, double* y, std::size_t n);
  // y[i] += x[i]
  void (*acc)(double* y, const double* x, std::size_t n);
  // y[i] = x1[i] + x2[i]
  void (*add2)(const double* x1, const double* x2, double* y, std::size_t n);

  // Scalar-model kinetic EC interface flux:
  //   jump = VR-VL; tie when |jump| <= 1e-12*(1+|VL|+|VR|)
  //   out  = tie ? 0.5*(vfL+vfR) : (chiR-chiL)/jump
  void (*scalar_ec_line)(const double* VL, const double* VR, const double* chiL,
                         const double* chiR, const double* vfL, const double* vfR,
                         double* out, std::size_t n);

  // Shallow-water kinetic EC interface flux for one velocity m and direction d
  // (coefficients v = v_m^(d), a = a_m, b1/b2 = b_m^(1)/b_m^(2); b2 unused in 1D):
  //   phi  = a + b1*u1b + b2*u2b          (bars are arithmetic interface means)
  //   f0   = v*rb*phi
  //   fj   = v*(rb*ujb*phi + kappa*bj*r2b)
  void (*sw_ec_line_1d)(const double* rhoL, const double* rhoR, const double* u1L,
                        const double* u1R, const double* r2L, const double* r2R,
                        double v, double a, double b1, double kappa, double* f0,
                        double* f1, std::size_t n);
  void (*sw_ec_line_2d)(const double* rhoL, const double* rhoR, const double* u1L,
                        const double* u1R, const double* u2L, const double* u2R,
                        const double* r2L, const double* r2R, double v, double a,
                        double b1, double b2, double kappa, double* f0, double* f1,
                        double* f2, std::size_t n);

  const char* name;
};

// Active implementation (env VECKIN_SIMD=scalar|avx2|auto overrides CPU detection).
const Ops& active();

// Named implementations for equivalence tests; null if unavailable on this build/CPU.
const Ops* get(std::string_view name);

extern const Ops scalar_ops;

}  // namespace veckin::kernels
