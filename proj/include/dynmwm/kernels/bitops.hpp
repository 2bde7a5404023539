#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dynmwm::kernels {

enum class Isa { kScalar, kAvx2 };

bool avx2_supported();
// Picked once from cpuid; DYNMWM_ISA=scalar in the environment forces the fallback.
Isa active_isa();
void force_isa(Isa isa);  // throws if the requested ISA is unavailable
std::string_view isa_name(Isa isa);

// out bit i = OR_j (rows[i][j] & v[j]). rows is row-major, `words` 64-bit words per row.
void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words, const std::uint64_t* v,
                 std::uint64_t* out);

// popcount(a & mask) over `words` words.
std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words);

// out[i] = lo[i] <= s[i] && s[i] <= hi[i]; returns the number of set flags.
std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi, std::size_t count,
                         std::uint8_t* out);

namespace scalar {
void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words, const std::uint64_t* v,
                 std::uint64_t* out);
std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words);
std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi, std::size_t count,
                         std::uint8_t* out);
}  // namespace scalar

namespace avx2 {
void bool_matvec(const std::uint64_t* rows, std::size_t n_rows, std::size_t words, const std::uint64_t* v,
                 std::uint64_t* out);
std::size_t masked_popcount(const std::uint64_t* a, const std::uint64_t* mask, std::size_t words);
std::size_t window_flags(const std::int64_t* s, const std::int64_t* lo, const std::int64_t* hi, std::size_t count,
                         std::uint8_t* out);
}  // namespace avx2

}  // namespace dynmwm::kernels
