#include "dynmwm/oracle/group_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace dynmwm {

int default_repetitions(int gamma, int n_host) {
  if (gamma <= 1) return 1;
  const double n = std::max(2, n_host);
  return static_cast<int>(std::ceil(4.0 * gamma * gamma * std::log(n))) + 1;
}

std::vector<GroupEdge> sample_group_matching(const RepresentativeQuery& base,
                                             const std::function<std::span<const Vertex>(int)>& members,
                                             std::span<const int> left_groups, std::span<const int> right_groups,
                                             int k, std::mt19937_64& rng) {
  if (left_groups.empty() || right_groups.empty() || k <= 0) return {};
  std::vector<int> groups(left_groups.begin(), left_groups.end());
  groups.insert(groups.end(), right_groups.begin(), right_groups.end());
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());

  std::unordered_map<int, Vertex> rep;
  std::unordered_map<Vertex, int> group_of;
  std::vector<Vertex> left, right;
  std::vector<GroupEdge> best;
  bool have_best = false;
  for (int round = 0; round < k; ++round) {
    rep.clear();
    group_of.clear();
    for (int g : groups) {
      auto m = members(g);
      if (m.empty()) continue;
      Vertex x = m.size() == 1 ? m[0] : m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(rng)];
      rep[g] = x;
      group_of[x] = g;
    }
    left.clear();
    right.clear();
    for (int g : left_groups) {
      if (auto it = rep.find(g); it != rep.end()) left.push_back(it->second);
    }
    for (int g : right_groups) {
      if (auto it = rep.find(g); it != rep.end()) right.push_back(it->second);
    }
    std::vector<GroupEdge> got;
    for (Edge e : base(left, right)) {
      auto a = group_of.find(e.u);
      auto b = group_of.find(e.v);
      if (a == group_of.end() || b == group_of.end()) {
        throw ContractViolation("representative query returned a vertex that was not sampled");
      }
      if (a->second == b->second) continue;
      got.push_back({a->second, b->second, e.u, e.v});
    }
    if (!have_best || got.size() > best.size()) {
      best = std::move(got);
      have_best = true;
    }
  }
  return best;
}

}  // namespace dynmwm
