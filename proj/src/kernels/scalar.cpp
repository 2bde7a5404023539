#include <bit>

#include "dynmwm/kernels/bitops.hpp"

namespace dynmwm::kernels::scalar {

void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words, const std::uint64_t* v,
                 std::uint64_t* out) {
  const std::size_t out_words = (n_rows + 63) / 64;
  for (std::size_t w = 0; w < out_words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    const std::uint64_t* row = rows + i * words;
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < words; ++j) acc |= row[j] & v[j];
    if (acc != 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t j = 0; j < words; ++j) total += static_cast<std::size_t>(std::popcount(a[j] & mask[j]));
  return total;
}

std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi, std::size_t count,
                         std::uint8_t* out) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const bool in = lo[i] <= s[i] && s[i] <= hi[i];
    out[i] = in ? 1 : 0;
    hits += in;
  }
  return hits;
}

}  // namespace dynmwm::kernels::scalar
