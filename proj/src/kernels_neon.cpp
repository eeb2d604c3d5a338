#include "mirror/kernels.hpp"

#if defined(MIRROR_BUILD_NEON)

#include <arm_neon.h>

namespace mirror::kernels::neon {

double dot(const double* a, const double* b, size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(a + i), vld1q_f64(b + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double res = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) res += a[i] * b[i];
  return res;
}

double l2_sq(const double* a, const double* b, size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i));
    const float64x2_t d1 = vsubq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
    acc0 = vfmaq_f64(acc0, d0, d0);
    acc1 = vfmaq_f64(acc1, d1, d1);
  }
  double res = vaddvq_f64(acc0) + vaddvq_f64(acc1);
  for (; i < n; ++i) {
    const double d = a[i] - b[i];
    res += d * d;
  }
  return res;
}

double sum(const double* x, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vld1q_f64(x + i));
  }
  double res = vaddvq_f64(acc);
  for (; i < n; ++i) res += x[i];
  return res;
}

void max_accumulate(double* acc, const double* x, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(acc + i, vmaxq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  }
  for (; i < n; ++i) {
    if (x[i] > acc[i]) acc[i] = x[i];
  }
}

void add_accumulate(double* acc, const double* x, size_t n) {
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  }
  for (; i < n; ++i) acc[i] += x[i];
}

void axpy(double alpha, const double* x, double* y, size_t n) {
  // mul+add rather than fma so results stay bit-exact with the scalar path
  const float64x2_t va = vdupq_n_f64(alpha);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t prod = vmulq_f64(va, vld1q_f64(x + i));
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(double* x, double s, size_t n) {
  const float64x2_t vs = vdupq_n_f64(s);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(x + i, vmulq_f64(vs, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) x[i] *= s;
}

}  // namespace mirror::kernels::neon

#endif  // MIRROR_BUILD_NEON
