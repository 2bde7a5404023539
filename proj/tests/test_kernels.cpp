#include <doctest.h>

#include <random>
#include <vector>

#include "dynmwm/kernels/bitops.hpp"

using namespace dynmwm;

TEST_CASE("AVX2 kernels agree with scalar") {
  if (!kernels::avx2_supported()) return;
  std::mt19937_64 rng(11);
  for (std::size_t words : {1u, 3u, 4u, 5u, 9u}) {
    const std::size_t n = 37;
    std::vector<std::uint64_t> rows(n * words), v(words), a((n + 63) / 64), b((n + 63) / 64);
    for (auto& x : rows) x = rng() & rng();
    for (auto& x : v) x = rng() & rng() & rng();
    kernels::scalar::bool_matvec(rows.data(), n, words, v.data(), a.data());
    kernels::avx2::bool_matvec(rows.data(), n, words, v.data(), b.data());
    CHECK(a == b);
    CHECK(kernels::scalar::masked_popcount(rows.data(), v.data(), words) ==
          kernels::avx2::masked_popcount(rows.data(), v.data(), words));
  }
  for (std::size_t count : {0u, 1u, 4u, 7u, 33u}) {
    std::vector<std::int64_t> s(count), lo(count), hi(count);
    for (std::size_t i = 0; i < count; ++i) {
      s[i] = static_cast<std::int64_t>(rng() % 20) - 5;
      lo[i] = static_cast<std::int64_t>(rng() % 10);
      hi[i] = lo[i] + static_cast<std::int64_t>(rng() % 6);
    }
    std::vector<std::uint8_t> f1(count), f2(count);
    CHECK(kernels::scalar::window_flags(s.data(), lo.data(), hi.data(), count, f1.data()) ==
          kernels::avx2::window_flags(s.data(), lo.data(), hi.data(), count, f2.data()));
    CHECK(f1 == f2);
  }
}

TEST_CASE("window flags boundaries are inclusive") {
  const std::int64_t s[3] = {4, 6, 7};
  const std::int64_t lo[3] = {4, 4, 4};
  const std::int64_t hi[3] = {6, 6, 6};
  std::uint8_t f[3];
  CHECK(kernels::window_flags(s, lo, hi, 3, f) == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == 1);
  CHECK(f[2] == 0);
}

TEST_CASE("scalar fallback can be forced") {
  const auto before = kernels::active_isa();
  kernels::force_isa(kernels::Isa::kScalar);
  CHECK(kernels::active_isa() == kernels::Isa::kScalar);
  kernels::force_isa(before);
}
