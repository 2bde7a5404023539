#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

// Edge of the contracted bipartization between left group a and right group b,
// with the underlying host vertices that produced it.
struct GroupEdge {
  int left_group;
  int right_group;
  Vertex a;
  Vertex b;
};

// Answers a base query on explicit representatives: returns pairs (x, y), x drawn
// from `left`, y from `right`.
using RepresentativeQuery =
    std::function<std::vector<Edge>(std::span<const Vertex> left, std::span<const Vertex> right)>;

// k rounds; each draws one uniform member per distinct group (a group asked on both
// sides uses the same member on both), queries, and keeps the largest result
// (first one on ties). Pairs inside one group are dropped.
std::vector<GroupEdge> sample_group_matching(const RepresentativeQuery& base,
                                             const std::function<std::span<const Vertex>(int)>& members,
                                             std::span<const int> left_groups, std::span<const int> right_groups,
                                             int k, std::mt19937_64& rng);

// ceil(4 gamma^2 ln n) + 1, or 1 when gamma == 1.
int default_repetitions(int gamma, int n_host);

}  // namespace dynmwm
