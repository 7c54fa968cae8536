#pragma once

// Dense vector kernels used by assembly, line searches and path arclength.
//
// Every kernel has a scalar reference implementation; SIMD variants (AVX2 on
// x86-64, NEON on AArch64) are selected once at startup. Elementwise kernels
// are bitwise identical across variants; reductions (dot, sum) differ only in
// summation order.
//
// Set ORLICZ_SIMD=scalar|avx2|neon to force a variant (falls back to scalar
// when the requested one is unavailable).

#include <cstddef>
#include <span>
#include <string_view>

namespace orlicz::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  double (*max_abs)(const double* x, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // z[i] = x[i] + a * y[i]
  void (*add_scaled)(const double* x, double a, const double* y, double* z, std::size_t n);
  // out[i] = (x[i+1] - x[i]) * s, for i < n-1
  void (*adjacent_diff)(const double* x, double s, double* out, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
// nullptr when the variant is not compiled in or not supported by this CPU.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

// Table chosen at first use.
const KernelTable& active() noexcept;

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline double sum(std::span<const double> x) { return active().sum(x.data(), x.size()); }
inline double max_abs(std::span<const double> x) {
  return active().max_abs(x.data(), x.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void add_scaled(std::span<const double> x, double a, std::span<const double> y,
                       std::span<double> z) {
  active().add_scaled(x.data(), a, y.data(), z.data(), x.size());
}
inline void adjacent_diff(std::span<const double> x, double s, std::span<double> out) {
  active().adjacent_diff(x.data(), s, out.data(), x.size());
}

}  // namespace orlicz::kernels
