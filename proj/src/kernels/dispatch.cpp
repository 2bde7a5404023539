#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "dynmwm/kernels/bitops.hpp"

namespace dynmwm::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("DYNMWM_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  return avx2_supported() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_supported()) throw std::runtime_error("AVX2 not supported on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words, const std::uint64_t* v,
                 std::uint64_t* out) {
  if (active_isa() == Isa::kAvx2) return avx2::bool_matvec(rows, n_rows, words, v, out);
  scalar::bool_matvec(rows, n_rows, words, v, out);
}

std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words) {
  if (active_isa() == Isa::kAvx2) return avx2::masked_popcount(a, mask, words);
  return scalar::masked_popcount(a, mask, words);
}

std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi, std::size_t count,
                         std::uint8_t* out) {
  if (active_isa() == Isa::kAvx2) return avx2::window_flags(s, lo, hi, count, out);
  return scalar::window_flags(s, lo, hi, count, out);
}

}  // namespace dynmwm::kernels
