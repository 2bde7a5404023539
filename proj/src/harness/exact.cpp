#include "dynmwm/harness/exact.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace dynmwm {

ExactMatching exact_mwm(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > kExactDpLimit) throw ContractViolation("exact_mwm is limited to n <= 20");
  const std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
  // best[mask]: heaviest matching inside mask; the lowest vertex is left free or paired.
  std::vector<Weight> best(std::size_t{full} + 1, 0);
  std::vector<std::int8_t> pick(std::size_t{full} + 1, -1);
  for (std::uint32_t mask = 1; mask <= full && full; ++mask) {
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    best[mask] = best[rest];
    for (const auto& [j, w] : g.neighbors(i)) {
      if (!(rest >> j & 1u)) continue;
      const Weight c = w + best[rest & ~(std::uint32_t{1} << j)];
      if (c > best[mask]) {
        best[mask] = c;
        pick[mask] = static_cast<std::int8_t>(j);
      }
    }
  }
  ExactMatching out{best[full], Matching(n)};
  for (std::uint32_t mask = full; mask;) {
    const int i = __builtin_ctz(mask);
    const std::uint32_t rest = mask & (mask - 1);
    if (pick[mask] < 0) {
      mask = rest;
    } else {
      out.matching.add(i, pick[mask]);
      mask = rest & ~(std::uint32_t{1} << pick[mask]);
    }
  }
  return out;
}

namespace {

void enumerate(const WeightedGraph& g, std::vector<char>& used, int from, Weight acc, Matching& cur,
               ExactMatching& best) {
  const int n = g.vertex_count();
  while (from < n && used[from]) ++from;
  if (from == n) {
    if (acc > best.value) best = {acc, cur};
    return;
  }
  used[from] = 1;
  enumerate(g, used, from + 1, acc, cur, best);
  for (const auto& [j, w] : g.neighbors(from)) {
    if (used[j]) continue;
    used[j] = 1;
    cur.add(from, j);
    enumerate(g, used, from + 1, acc + w, cur, best);
    cur.remove(from, j);
    used[j] = 0;
  }
  used[from] = 0;
}

}  // namespace

ExactMatching enumerate_mwm(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > kEnumerationLimit) throw ContractViolation("enumeration is limited to n <= 10");
  ExactMatching best{0, Matching(n)};
  std::vector<char> used(n, 0);
  Matching cur(n);
  enumerate(g, used, 0, 0, cur, best);
  return best;
}

namespace {

// f(mask) with the lowest vertex of mask left free or paired; only reachable masks are stored.
class MemoDp {
 public:
  explicit MemoDp(const WeightedGraph& g) : g_(g) {}

  Weight solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second.first;
    if (memo_.size() >= kMemoStateLimit) throw ContractViolation("memoized exact MWM exceeded its state budget");
    const int i = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    Weight best = solve(rest);
    int pick = -1;
    for (const auto& [j, w] : g_.neighbors(i)) {
      if (!(rest >> j & 1u)) continue;
      const Weight c = w + solve(rest & ~(std::uint64_t{1} << j));
      if (c > best) {
        best = c;
        pick = j;
      }
    }
    memo_.emplace(mask, std::make_pair(best, pick));
    return best;
  }

  int pick(std::uint64_t mask) const { return memo_.at(mask).second; }

 private:
  const WeightedGraph& g_;
  std::unordered_map<std::uint64_t, std::pair<Weight, int>> memo_;
};

}  // namespace

ExactMatching memo_mwm(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (n > kMemoLimit) throw ContractViolation("memoized exact MWM is limited to n <= 64");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  MemoDp dp(g);
  ExactMatching out{dp.solve(full), Matching(n)};
  for (std::uint64_t mask = full; mask;) {
    const int i = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const int j = dp.pick(mask);
    if (j < 0) {
      mask = rest;
    } else {
      out.matching.add(i, j);
      mask = rest & ~(std::uint64_t{1} << j);
    }
  }
  return out;
}

ExactMatching best_exact_mwm(const WeightedGraph& g) {
  return g.vertex_count() <= kExactDpLimit ? exact_mwm(g) : memo_mwm(g);
}

}  // namespace dynmwm
