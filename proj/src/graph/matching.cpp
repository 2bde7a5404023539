#include "dynmwm/graph/matching.hpp"

#include <algorithm>
#include <string>

namespace dynmwm {

void Matching::add(Vertex u, Vertex v) {
  if (u == v || mate_[u] != kNoVertex || mate_[v] != kNoVertex) {
    throw ContractViolation("cannot match " + std::to_string(u) + " with " + std::to_string(v));
  }
  mate_[u] = v;
  mate_[v] = u;
  ++size_;
}

void Matching::remove(Vertex u, Vertex v) {
  if (mate_[u] != v) {
    throw ContractViolation("{" + std::to_string(u) + "," + std::to_string(v) + "} is not matched");
  }
  mate_[u] = kNoVertex;
  mate_[v] = kNoVertex;
  --size_;
}

void Matching::clear() {
  std::fill(mate_.begin(), mate_.end(), kNoVertex);
  size_ = 0;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (mate_[u] > u) out.push_back({u, mate_[u]});
  }
  return out;
}

std::vector<Vertex> Matching::free_vertices() const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < vertex_count(); ++u) {
    if (mate_[u] == kNoVertex) out.push_back(u);
  }
  return out;
}

Weight matching_weight(const WeightedGraph& g, const Matching& m) {
  Weight total = 0;
  for (Edge e : m.edges()) {
    auto w = g.weight(e.u, e.v);
    if (!w) throw ContractViolation("matched pair is not an edge of the graph");
    total += *w;
  }
  return total;
}

bool is_valid_matching(const WeightedGraph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count()) return false;
  for (Vertex u = 0; u < m.vertex_count(); ++u) {
    Vertex v = m.mate(u);
    if (v == kNoVertex) continue;
    if (v < 0 || v >= m.vertex_count() || m.mate(v) != u || !g.has_edge(u, v)) return false;
  }
  return true;
}

bool is_augmenting_path(const Matching& m, std::span<const Vertex> path, std::string* why,
                        const std::function<bool(Vertex, Vertex)>& has_edge) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (path.size() < 2 || path.size() % 2 != 0) return fail("path must have an even, positive vertex count");
  std::vector<Vertex> sorted(path.begin(), path.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("path repeats a vertex");
  for (Vertex v : path) {
    if (v < 0 || v >= m.vertex_count()) return fail("vertex out of range");
  }
  if (!m.is_free(path.front()) || !m.is_free(path.back())) return fail("endpoints must be free");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool matched = m.contains(path[i], path[i + 1]);
    if (matched != (i % 2 == 1)) {
      return fail("alternation breaks at position " + std::to_string(i));
    }
    if (has_edge && !has_edge(path[i], path[i + 1])) {
      return fail("position " + std::to_string(i) + " is not a host edge");
    }
  }
  return true;
}

void augment_in_place(Matching& m, std::span<const Vertex> path) {
  std::string why;
  if (!is_augmenting_path(m, path, &why)) throw ContractViolation("not an augmenting path: " + why);
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) m.remove(path[i], path[i + 1]);
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) m.add(path[i], path[i + 1]);
}

Matching augment_along(const Matching& m, std::span<const Vertex> path,
                       const std::function<bool(Vertex, Vertex)>& has_edge) {
  std::string why;
  if (!is_augmenting_path(m, path, &why, has_edge)) {
    throw ContractViolation("not an augmenting path: " + why);
  }
  Matching out = m;
  augment_in_place(out, path);
  return out;
}

}  // namespace dynmwm
