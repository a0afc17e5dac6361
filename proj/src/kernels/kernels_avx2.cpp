#include <immintrin.h>

#include <cmath>

#include "veckin/kernels.hpp"

// AVX2 variants. Operation order mirrors the scalar reference exactly and no
// FMA is used, so every lane rounds identically to the scalar path.

namespace veckin::kernels {
namespace {

inline __m256d vabs(__m256d x) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(x, mask);
}

void triad(double a, const double* xa, double b, const double* xb, double c,
           const double* xc, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a), vb = _mm256_set1_pd(b), vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(xa + i)),
                              _mm256_mul_pd(vb, _mm256_loadu_pd(xb + i)));
    t = _mm256_add_pd(t, _mm256_mul_pd(vc, _mm256_loadu_pd(xc + i)));
    _mm256_storeu_pd(y + i, t);
  }
  for (; i < n; ++i) y[i] = a * xa[i] + b * xb[i] + c * xc[i];
}

void acc(double* y, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] += x[i];
}

void add2(const double* x1, const double* x2, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(x1 + i), _mm256_loadu_pd(x2 + i)));
  for (; i < n; ++i) y[i] = x1[i] + x2[i];
}

void scalar_ec_line(const double* VL, const double* VR, const double* chiL,
                    const double* chiR, const double* vfL, const double* vfR,
                    double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d eps = _mm256_set1_pd(1e-12);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vl = _mm256_loadu_pd(VL + i), vr = _mm256_loadu_pd(VR + i);
    const __m256d jump = _mm256_sub_pd(vr, vl);
    const __m256d tie =
        _mm256_mul_pd(eps, _mm256_add_pd(_mm256_add_pd(one, vabs(vl)), vabs(vr)));
    const __m256d take_ratio = _mm256_cmp_pd(vabs(jump), tie, _CMP_GT_OQ);
    const __m256d denom = _mm256_blendv_pd(one, jump, take_ratio);
    const __m256d ratio = _mm256_div_pd(
        _mm256_sub_pd(_mm256_loadu_pd(chiR + i), _mm256_loadu_pd(chiL + i)), denom);
    const __m256d avg = _mm256_mul_pd(
        half, _mm256_add_pd(_mm256_loadu_pd(vfL + i), _mm256_loadu_pd(vfR + i)));
    _mm256_storeu_pd(out + i, _mm256_blendv_pd(avg, ratio, take_ratio));
  }
  for (; i < n; ++i) {
    const double jump = VR[i] - VL[i];
    const double tie = 1e-12 * (1.0 + std::fabs(VL[i]) + std::fabs(VR[i]));
    out[i] = std::fabs(jump) > tie ? (chiR[i] - chiL[i]) / jump
                                   : 0.5 * (vfL[i] + vfR[i]);
  }
}

inline __m256d mean(const double* l, const double* r, std::size_t i) {
  return _mm256_mul_pd(_mm256_set1_pd(0.5),
                       _mm256_add_pd(_mm256_loadu_pd(l + i), _mm256_loadu_pd(r + i)));
}

void sw_ec_line_1d(const double* rhoL, const double* rhoR, const double* u1L,
                   const double* u1R, const double* r2L, const double* r2R, double v,
                   double a, double b1, double kappa, double* f0, double* f1,
                   std::size_t n) {
  const __m256d vv = _mm256_set1_pd(v), va = _mm256_set1_pd(a), vb1 = _mm256_set1_pd(b1);
  const __m256d vkb1 = _mm256_set1_pd(kappa * b1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d rb = mean(rhoL, rhoR, i);
    const __m256d u1b = mean(u1L, u1R, i);
    const __m256d r2b = mean(r2L, r2R, i);
    const __m256d phi = _mm256_add_pd(va, _mm256_mul_pd(vb1, u1b));
    _mm256_storeu_pd(f0 + i, _mm256_mul_pd(vv, _mm256_mul_pd(rb, phi)));
    const __m256d m1 = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(rb, u1b), phi),
                                     _mm256_mul_pd(vkb1, r2b));
    _mm256_storeu_pd(f1 + i, _mm256_mul_pd(vv, m1));
  }
  for (; i < n; ++i) {
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
  const __m256d vv = _mm256_set1_pd(v), va = _mm256_set1_pd(a);
  const __m256d vb1 = _mm256_set1_pd(b1), vb2 = _mm256_set1_pd(b2);
  const __m256d vkb1 = _mm256_set1_pd(kappa * b1), vkb2 = _mm256_set1_pd(kappa * b2);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d rb = mean(rhoL, rhoR, i);
    const __m256d u1b = mean(u1L, u1R, i);
    const __m256d u2b = mean(u2L, u2R, i);
    const __m256d r2b = mean(r2L, r2R, i);
    const __m256d phi = _mm256_add_pd(
        va, _mm256_add_pd(_mm256_mul_pd(vb1, u1b), _mm256_mul_pd(vb2, u2b)));
    _mm256_storeu_pd(f0 + i, _mm256_mul_pd(vv, _mm256_mul_pd(rb, phi)));
    const __m256d m1 = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(rb, u1b), phi),
                                     _mm256_mul_pd(vkb1, r2b));
    _mm256_storeu_pd(f1 + i, _mm256_mul_pd(vv, m1));
    const __m256d m2 = _mm256_add_pd(_mm256_mul_pd(_mm256_mul_pd(rb, u2b), phi),
                                     _mm256_mul_pd(vkb2, r2b));
    _mm256_storeu_pd(f2 + i, _mm256_mul_pd(vv, m2));
  }
  for (; i < n; ++i) {
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

extern const Ops avx2_ops;
const Ops avx2_ops = {triad, acc,           add2,          scalar_ec_line,
                      sw_ec_line_1d, sw_ec_line_2d, "avx2"};

}  // namespace veckin::kernels
