#pragma once

#include "dynmwm/graph/matching.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

struct ExactMatching {
  Weight value = 0;
  Matching matching;
};

inline constexpr int kExactDpLimit = 20;
inline constexpr int kEnumerationLimit = 10;

// Subset DP over vertex masks, n <= 20.
ExactMatching exact_mwm(const WeightedGraph& g);
// Every matching, n <= 10.
ExactMatching enumerate_mwm(const WeightedGraph& g);
inline constexpr int kMemoLimit = 64;
inline constexpr std::size_t kMemoStateLimit = 20'000'000;

// Same recursion memoized over reachable masks only; n <= 64, sparse graphs.
// Throws if the state budget runs out.
ExactMatching memo_mwm(const WeightedGraph& g);
// DP when it applies, Boost otherwise.
ExactMatching best_exact_mwm(const WeightedGraph& g);

}  // namespace dynmwm
