#include <immintrin.h>

#include <bit>

#include "dynmwm/kernels/bitops.hpp"

#define DYNMWM_AVX2 __attribute__((target("avx2,popcnt")))

namespace dynmwm::kernels::avx2 {

DYNMWM_AVX2 void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words,
                             const std::uint64_t* v, std::uint64_t* out) {
  const std::size_t out_words = (n_rows + 63) / 64;
  for (std::size_t w = 0; w < out_words; ++w) out[w] = 0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    const std::uint64_t* row = rows + i * words;
    __m256i acc = _mm256_setzero_si256();
    std::size_t j = 0;
    for (; j + 4 <= words; j += 4) {
      __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + j));
      __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + j));
      acc = _mm256_or_si256(acc, _mm256_and_si256(r, x));
    }
    std::uint64_t tail = 0;
    for (; j < words; ++j) tail |= row[j] & v[j];
    if (!_mm256_testz_si256(acc, acc) || tail != 0) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
}

DYNMWM_AVX2 std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words) {
  std::size_t total = 0;
  std::size_t j = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; j + 4 <= words; j += 4) {
    __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + j)),
                                 _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + j)));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), x);
    total += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                      _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  for (; j < words; ++j) total += static_cast<std::size_t>(_mm_popcnt_u64(a[j] & mask[j]));
  return total;
}

DYNMWM_AVX2 std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi,
                                     std::size_t count, std::uint8_t* out) {
  std::size_t hits = 0;
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i sv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
    __m256i lv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lo + i));
    __m256i hv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(hi + i));
    // outside = lo > s or s > hi
    __m256i outside = _mm256_or_si256(_mm256_cmpgt_epi64(lv, sv), _mm256_cmpgt_epi64(sv, hv));
    int bits = _mm256_movemask_pd(_mm256_castsi256_pd(outside));
    for (int k = 0; k < 4; ++k) {
      const std::uint8_t in = ((bits >> k) & 1) ? 0 : 1;
      out[i + k] = in;
      hits += in;
    }
  }
  for (; i < count; ++i) {
    const bool in = lo[i] <= s[i] && s[i] <= hi[i];
    out[i] = in ? 1 : 0;
    hits += in;
  }
  return hits;
}

}  // namespace dynmwm::kernels::avx2
