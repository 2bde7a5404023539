#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dynmwm/graph/types.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  explicit BipartiteGraph(std::vector<std::uint8_t> side);

  int vertex_count() const { return static_cast<int>(side_.size()); }
  std::uint8_t side(Vertex v) const { return side_[v]; }
  const std::vector<std::uint8_t>& sides() const { return side_; }

  // Endpoints must lie on different sides. Call finalize() once all edges are in.
  void add_edge(Vertex a, Vertex b);
  void finalize();

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  std::size_t edge_count() const { return edge_count_; }
  std::vector<Edge> edges() const;  // normalized, lexicographic

 private:
  std::vector<std::uint8_t> side_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

// B_G: u^L = u on side 0, u^R = n + u on side 1; both orientations of every edge.
BipartiteGraph bipartization(int n, std::span<const Edge> edges);
BipartiteGraph bipartization(const WeightedGraph& g);

// Layered augmenting-path maximum matching on an induced subgraph. Reusable
// scratch space; vertices and neighbors are scanned in ascending id order
// so results are deterministic.
class HopcroftKarp {
 public:
  // Result edges are (side-0 vertex, side-1 vertex), sorted.
  std::vector<Edge> solve(const BipartiteGraph& g, std::span<const Vertex> subset);
  std::vector<Edge> solve_all(const BipartiteGraph& g);

 private:
  bool bfs();
  bool dfs(Vertex u);

  const BipartiteGraph* g_ = nullptr;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> mate_;
  std::vector<int> dist_;
  std::vector<std::uint32_t> cursor_;
  std::vector<Vertex> lefts_;
  std::vector<Vertex> queue_;
  bool in_subset(Vertex v) const { return stamp_[v] == epoch_; }
};

}  // namespace dynmwm
