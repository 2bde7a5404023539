#pragma once

#include <vector>

#include "dynmwm/graph/bipartite.hpp"
#include "dynmwm/graph/epsilon.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

// G^eps. Grid index i in 0..K (K = 1/eps) stands for the dual value i*eps*W.
// u^1_i = u*(K+1) + i on side 0 and u^2_i = n*(K+1) + u*(K+1) + i on side 1.
// Edges {u^1_i, v^2_j} for w(u,v) <= (i+j)*eps*W <= w(u,v) + 2*eps*W, both orientations of {u,v}.
class EpsilonExtension {
 public:
  EpsilonExtension(int n, Weight max_weight, Epsilon eps);

  int source_vertex_count() const { return n_; }
  Weight max_weight() const { return W_; }
  Epsilon eps() const { return eps_; }
  int grid_size() const { return eps_.inverse() + 1; }
  int vertex_count() const { return 2 * n_ * grid_size(); }

  Vertex copy(Vertex v, int side, int i) const {
    return (side == 0 ? 0 : n_ * grid_size()) + v * grid_size() + i;
  }
  Vertex source_of(Vertex x) const { return (x % (n_ * grid_size())) / grid_size(); }
  int grid_index_of(Vertex x) const { return x % grid_size(); }
  int side_of(Vertex x) const { return x >= n_ * grid_size() ? 1 : 0; }

  // Scaled window test: K*w <= (i+j)*W <= K*w + 2W.
  bool in_window(Weight w, int i, int j) const;

  // All extension edges contributed by one source edge, as (side-0, side-1) pairs.
  std::vector<Edge> edges_for(Vertex u, Vertex v, Weight w) const;

  std::vector<std::uint8_t> sides() const;

 private:
  int n_;
  Weight W_;
  Epsilon eps_;
};

struct BuiltExtension {
  EpsilonExtension layout;
  BipartiteGraph graph;
};

BuiltExtension build_epsilon_extension(const WeightedGraph& g, Epsilon eps);

}  // namespace dynmwm
