#include "dynmwm/oracle/epsilon_extension.hpp"

namespace dynmwm {

EpsilonExtension::EpsilonExtension(int n, Weight max_weight, Epsilon eps) : n_(n), W_(max_weight), eps_(eps) {
  if (n < 0) throw ContractViolation("negative vertex count");
  if (max_weight < 1) throw ContractViolation("max weight must be >= 1");
}

bool EpsilonExtension::in_window(Weight w, int i, int j) const {
  const Weight K = eps_.inverse();
  const Weight s = static_cast<Weight>(i + j) * W_;
  return K * w <= s && s <= K * w + 2 * W_;
}

std::vector<Edge> EpsilonExtension::edges_for(Vertex u, Vertex v, Weight w) const {
  std::vector<Edge> out;
  const int g = grid_size();
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (!in_window(w, i, j)) continue;
      out.push_back({copy(u, 0, i), copy(v, 1, j)});
      out.push_back({copy(v, 0, i), copy(u, 1, j)});
    }
  }
  return out;
}

std::vector<std::uint8_t> EpsilonExtension::sides() const {
  std::vector<std::uint8_t> side(vertex_count(), 0);
  for (int x = n_ * grid_size(); x < vertex_count(); ++x) side[x] = 1;
  return side;
}

BuiltExtension build_epsilon_extension(const WeightedGraph& g, Epsilon eps) {
  EpsilonExtension layout(g.vertex_count(), g.max_weight(), eps);
  BipartiteGraph graph(layout.sides());
  for (const auto& e : g.edges()) {
    for (Edge x : layout.edges_for(e.u, e.v, e.w)) graph.add_edge(x.u, x.v);
  }
  graph.finalize();
  return {layout, std::move(graph)};
}

}  // namespace dynmwm
