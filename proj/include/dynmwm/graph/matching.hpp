#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dynmwm/graph/types.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(n, kNoVertex) {}

  int vertex_count() const { return static_cast<int>(mate_.size()); }
  std::size_t size() const { return size_; }
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool is_free(Vertex v) const { return mate_[v] == kNoVertex; }
  bool contains(Vertex u, Vertex v) const { return mate_[u] == v && v != kNoVertex; }

  void add(Vertex u, Vertex v);
  void remove(Vertex u, Vertex v);
  void clear();

  std::vector<Edge> edges() const;
  std::vector<Vertex> free_vertices() const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.mate_ == b.mate_; }

 private:
  std::vector<Vertex> mate_;
  std::size_t size_ = 0;
};

Weight matching_weight(const WeightedGraph& g, const Matching& m);

// Edges of m must exist in g and must be pairwise disjoint.
bool is_valid_matching(const WeightedGraph& g, const Matching& m);

// Alternation check: distinct vertices, free endpoints, path[i]path[i+1] matched exactly for odd i.
// If has_edge is given, every consecutive pair must also be a host edge.
bool is_augmenting_path(const Matching& m, std::span<const Vertex> path, std::string* why = nullptr,
                        const std::function<bool(Vertex, Vertex)>& has_edge = {});

// Returns m xor path; throws ContractViolation when path is not augmenting.
Matching augment_along(const Matching& m, std::span<const Vertex> path,
                       const std::function<bool(Vertex, Vertex)>& has_edge = {});

// In-place variant used by the framework loops.
void augment_in_place(Matching& m, std::span<const Vertex> path);

}  // namespace dynmwm
