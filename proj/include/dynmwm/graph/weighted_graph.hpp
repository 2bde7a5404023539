#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Weight w;
  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected graph on a fixed vertex set with integer weights in [1, W].
class WeightedGraph {
 public:
  using Neighbor = std::pair<Vertex, Weight>;

  WeightedGraph() = default;
  WeightedGraph(int n, Weight max_weight);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  Weight max_weight() const { return max_weight_; }
  std::size_t edge_count() const { return edge_count_; }

  void insert_edge(Vertex u, Vertex v, Weight w);
  void delete_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::optional<Weight> weight(Vertex u, Vertex v) const;

  // Sorted by neighbor id.
  const std::vector<Neighbor>& neighbors(Vertex u) const { return adj_[u]; }
  // Every edge once with u < v, in lexicographic order.
  std::vector<WeightedEdge> edges() const;
  std::vector<Edge> edge_pairs() const;

 private:
  void check_vertex(Vertex v) const;

  Weight max_weight_ = 1;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Neighbor>> adj_;
};

}  // namespace dynmwm
