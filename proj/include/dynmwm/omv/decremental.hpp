#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "dynmwm/omv/matrix.hpp"
#include "dynmwm/oracle/backend.hpp"

namespace dynmwm {

struct OmvConfig {
  double eps = 1.0 / 16;
  std::uint64_t seed = 1;
  // <= 0 means ceil(10 eps^{1/4} n^2 ln n) and ceil(10 eps^{1/2} n^2 ln n)
  long long t_l = 0;
  long long t_r = 0;
};

long long default_t_l(int n, double eps);
long long default_t_r(int n, double eps);

struct OmvQueryStats {
  long long t_l = 0;
  long long t_r = 0;
  std::size_t set_loop1 = 0;
  std::size_t set_loop2 = 0;
  std::size_t set_peel = 0;
  std::size_t peel_rounds = 0;
  // surviving rows with degree into T >= eps^{-1/4} after the first loop
  std::size_t loop1_violations = 0;
  // surviving columns with degree into S >= eps^{-1/2} after the second loop
  std::size_t loop2_violations = 0;
  std::size_t crossing_edges_at_exit = 0;
  std::size_t matched_crossing_at_exit = 0;
  bool undo_ok = true;
};

// Bipartite host B with u^L_i = i, ~u^L_i = n+i, u^R_i = 2n+i, ~u^R_i = 3n+i.
// Side 0 holds u^L and ~u^R, so every pendant edge crosses the bipartition.
class DecrementalOmv {
 public:
  DecrementalOmv(BooleanMatrix m, OmvConfig cfg, std::unique_ptr<McmBackend> backend = nullptr);

  int size() const { return m_.size(); }
  const BooleanMatrix& matrix() const { return m_; }
  const OmvConfig& config() const { return cfg_; }

  void remove(int i, int j);
  BitVector query(const BitVector& v);

  const OmvQueryStats& last_stats() const { return stats_; }
  McmBackend& backend() { return *backend_; }
  std::size_t host_edge_count() const { return host_edges_; }
  std::size_t queries() const { return queries_; }

  static std::vector<std::uint8_t> host_sides(int n);

 private:
  Vertex left(int i) const { return i; }
  Vertex left_pendant(int i) const { return m_.size() + i; }
  Vertex right(int j) const { return 2 * m_.size() + j; }
  Vertex right_pendant(int j) const { return 3 * m_.size() + j; }

  BooleanMatrix m_;
  OmvConfig cfg_;
  std::unique_ptr<McmBackend> backend_;
  std::mt19937_64 rng_;
  std::size_t host_edges_ = 0;
  std::size_t queries_ = 0;
  OmvQueryStats stats_;
};

}  // namespace dynmwm
