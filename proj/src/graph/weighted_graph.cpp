#include "dynmwm/graph/weighted_graph.hpp"

#include <algorithm>
#include <string>

namespace dynmwm {

namespace {
auto find_neighbor(const std::vector<WeightedGraph::Neighbor>& list, Vertex v) {
  return std::lower_bound(list.begin(), list.end(), v,
                          [](const WeightedGraph::Neighbor& a, Vertex b) { return a.first < b; });
}
}  // namespace

WeightedGraph::WeightedGraph(int n, Weight max_weight) : max_weight_(max_weight), adj_(n) {
  if (n < 0) throw ContractViolation("negative vertex count");
  if (max_weight < 1) throw ContractViolation("W must be at least 1");
}

void WeightedGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count()) {
    throw ContractViolation("vertex " + std::to_string(v) + " out of range");
  }
}

void WeightedGraph::insert_edge(Vertex u, Vertex v, Weight w) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ContractViolation("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "}");
  if (w < 1 || w > max_weight_) {
    throw ContractViolation("weight " + std::to_string(w) + " outside [1, " +
                            std::to_string(max_weight_) + "]");
  }
  auto& au = adj_[u];
  auto it = find_neighbor(au, v);
  if (it != au.end() && it->first == v) {
    throw ContractViolation("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  au.insert(it, {v, w});
  auto& av = adj_[v];
  av.insert(find_neighbor(av, u), {u, w});
  ++edge_count_;
}

void WeightedGraph::delete_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& au = adj_[u];
  auto it = find_neighbor(au, v);
  if (it == au.end() || it->first != v) {
    throw ContractViolation("edge {" + std::to_string(u) + "," + std::to_string(v) + "} absent");
  }
  au.erase(it);
  auto& av = adj_[v];
  av.erase(find_neighbor(av, u));
  --edge_count_;
}

bool WeightedGraph::has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

std::optional<Weight> WeightedGraph::weight(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto& au = adj_[u];
  auto it = find_neighbor(au, v);
  if (it == au.end() || it->first != v) return std::nullopt;
  return it->second;
}

std::vector<WeightedEdge> WeightedGraph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto [v, w] : adj_[u]) {
      if (u < v) out.push_back({u, v, w});
    }
  }
  return out;
}

std::vector<Edge> WeightedGraph::edge_pairs() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (auto [v, w] : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace dynmwm
