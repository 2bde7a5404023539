#pragma once

#include <cstdint>
#include <vector>

#include "dynmwm/graph/matching.hpp"
#include "dynmwm/graph/types.hpp"

namespace dynmwm {

// Laminar family of blossoms over vertices 0..n-1.
//
// Ids 0..n-1 are the trivial blossoms {v}. Every non-trivial blossom stores its
// odd cycle of sub-blossoms: children[0] holds the base, and cycle[i] is the
// edge (x, y) with x in children[i] and y in children[(i + 1) % k]. With respect
// to a matching that respects the family, cycle[i] is matched exactly for odd i.
// Dissolved ids are never reused.
class BlossomFamily {
 public:
  using Id = std::int32_t;
  static constexpr Id kNone = -1;

  BlossomFamily() = default;
  explicit BlossomFamily(int n);

  int vertex_count() const { return n_; }
  Id id_limit() const { return static_cast<Id>(nodes_.size()); }
  bool is_trivial(Id b) const { return b < n_; }
  bool alive(Id b) const { return b >= 0 && b < id_limit() && nodes_[b].alive; }

  // Omega(v): the maximal blossom containing v.
  Id root(Vertex v) const { return root_[v]; }
  bool is_root(Id b) const { return alive(b) && nodes_[b].parent == kNone; }
  Id parent(Id b) const { return nodes_[b].parent; }
  const std::vector<Id>& children(Id b) const { return nodes_[b].children; }
  const std::vector<Edge>& cycle(Id b) const { return nodes_[b].cycle; }
  int size(Id b) const { return nodes_[b].size; }

  std::vector<Vertex> members(Id b) const;  // ascending
  bool contains(Id b, Vertex v) const;
  Vertex base(Id b) const;

  // Non-trivial blossoms containing v, innermost first.
  std::vector<Id> ancestors(Vertex v) const;

  // children must be distinct current roots, odd in number (>= 3), joined by cycle.
  Id add(std::vector<Id> children, std::vector<Edge> cycle);
  // b must be a non-trivial root; its children become roots.
  void dissolve(Id b);

  std::vector<Id> roots() const;       // ascending id, trivial roots included
  std::vector<Id> nontrivial() const;  // alive non-trivial ids, ascending
  std::vector<Id> nontrivial_roots() const;

  // E_B: the cycle edges of b and of every nested blossom, normalized.
  std::vector<Edge> blossom_edges(Id b) const;

  // Even-length alternating route x ... base(b) inside b (first edge matched when x != base).
  std::vector<Vertex> path_to_base(Id b, Vertex x) const;

  // Reorders every cycle below b so that children[0] holds the vertex of b that is
  // free or matched outside b, and matched cycle edges sit at odd positions again.
  // Needed after the matching changed along a path through b.
  void normalize(Id b, const Matching& m);

 private:
  struct Node {
    Id parent = kNone;
    std::vector<Id> children;
    std::vector<Edge> cycle;
    int size = 1;
    bool alive = true;
  };

  int child_index(Id b, Vertex x) const;
  void collect_members(Id b, std::vector<Vertex>& out) const;
  void append_path_to_base(Id b, Vertex x, std::vector<Vertex>& out) const;
  void append_path_from_base(Id b, Vertex x, std::vector<Vertex>& out) const;
  void normalize_with_base(Id b, Vertex base_vertex, const Matching& m);

  int n_ = 0;
  std::vector<Node> nodes_;
  std::vector<Id> root_;
};

// True iff |M cap E_B| = floor(|B|/2) for every non-trivial B.
bool respects(const Matching& m, const BlossomFamily& omega);

}  // namespace dynmwm
