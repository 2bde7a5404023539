#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dynmwm/graph/bipartite.hpp"
#include "dynmwm/search/search_graph.hpp"

namespace dynmwm {

enum class GroupQueryMode { kExact, kSampled };

// Explicit general graph H with oracles answered on its bipartization.
// Exact mode contracts the groups and runs an exact bipartite matching; Sampled mode
// runs the representative sampling with an exact oracle underneath.
class PlainSearchGraph final : public SearchGraph {
 public:
  PlainSearchGraph(int n, std::span<const Edge> edges, GroupQueryMode mode = GroupQueryMode::kExact,
                   std::uint64_t seed = 1, int repetitions = 0);

  int vertex_count() const override { return n_; }
  int host_vertex_count() const override { return 2 * n_; }
  std::vector<GroupEdge> group_matching(const GroupMembers& members, std::span<const int> left,
                                        std::span<const int> right) override;
  bool adjacent(Vertex a, Vertex b) override;
  const std::vector<Vertex>& neighbors(Vertex a) const override { return adj_[a]; }

  std::size_t group_queries() const { return queries_; }

 private:
  int n_;
  GroupQueryMode mode_;
  std::vector<std::vector<Vertex>> adj_;
  BipartiteGraph bip_;
  HopcroftKarp hk_;
  std::mt19937_64 rng_;
  int repetitions_;
  std::size_t queries_ = 0;
};

// Exact maximum matching between left and right groups of an explicit graph;
// witnesses are the lexicographically smallest pair behind each group edge.
std::vector<GroupEdge> exact_group_matching(int n, const std::function<const std::vector<Vertex>&(Vertex)>& adj,
                                            const GroupMembers& members, std::span<const int> left,
                                            std::span<const int> right);

}  // namespace dynmwm
