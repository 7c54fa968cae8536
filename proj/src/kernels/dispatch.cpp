#include <cstdlib>
#include <string_view>

#include "orlicz/kernels.hpp"

namespace orlicz::kernels {

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "scalar";
}

namespace {

const KernelTable& select() noexcept {
  const char* env = std::getenv("ORLICZ_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return scalar_table();
  if (want == "avx2") return avx2_table() ? *avx2_table() : scalar_table();
  if (want == "neon") return neon_table() ? *neon_table() : scalar_table();
  if (const auto* t = avx2_table()) return *t;
  if (const auto* t = neon_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace orlicz::kernels
