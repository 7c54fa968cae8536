#include "orlicz/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#include <cmath>
#define ORLICZ_HAVE_NEON 1
#endif

namespace orlicz::kernels {

#if ORLICZ_HAVE_NEON
namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(x + i + 2), vld1q_f64(y + i + 2)));
  }
  double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(x + i));
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) s += x[i];
  return s;
}

double max_abs_neon(const double* x, std::size_t n) {
  float64x2_t m = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabsq_f64(vld1q_f64(x + i)));
  double r = vmaxvq_f64(m);
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > r) r = a;
  }
  return r;
}

void axpy_neon(double a, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  for (; i < n; ++i) y[i] += a * x[i];
}

void add_scaled_neon(const double* x, double a, const double* y, double* z, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(z + i, vaddq_f64(vld1q_f64(x + i), vmulq_f64(va, vld1q_f64(y + i))));
  for (; i < n; ++i) z[i] = x[i] + a * y[i];
}

void adjacent_diff_neon(const double* x, double s, double* out, std::size_t n) {
  if (n < 2) return;
  const std::size_t m = n - 1;
  const float64x2_t vs = vdupq_n_f64(s);
  std::size_t i = 0;
  for (; i + 2 <= m; i += 2)
    vst1q_f64(out + i, vmulq_f64(vsubq_f64(vld1q_f64(x + i + 1), vld1q_f64(x + i)), vs));
  for (; i < m; ++i) out[i] = (x[i + 1] - x[i]) * s;
}

constexpr KernelTable kNeon{Isa::Neon,   dot_neon,        sum_neon,          max_abs_neon,
                            axpy_neon,   add_scaled_neon, adjacent_diff_neon};

}  // namespace

const KernelTable* neon_table() noexcept { return &kNeon; }

#else

const KernelTable* neon_table() noexcept { return nullptr; }

#endif

}  // namespace orlicz::kernels
