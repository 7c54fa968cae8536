#include "orlicz/kernels.hpp"

#include <cmath>

namespace orlicz::kernels {
namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double max_abs_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > m) m = a;
  }
  return m;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void add_scaled_scalar(const double* x, double a, const double* y, double* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] = x[i] + a * y[i];
}

void adjacent_diff_scalar(const double* x, double s, double* out, std::size_t n) {
  for (std::size_t i = 0; i + 1 < n; ++i) out[i] = (x[i + 1] - x[i]) * s;
}

constexpr KernelTable kScalar{Isa::Scalar,       dot_scalar,         sum_scalar,
                              max_abs_scalar,    axpy_scalar,        add_scaled_scalar,
                              adjacent_diff_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace orlicz::kernels
