#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dynmwm/graph/types.hpp"
#include "dynmwm/oracle/group_sampling.hpp"

namespace dynmwm {

using GroupMembers = std::function<std::span<const Vertex>(int)>;

// The graph H the structural search runs on, seen only through oracles.
class SearchGraph {
 public:
  virtual ~SearchGraph() = default;
  virtual int vertex_count() const = 0;
  // Vertex count of the oracle host; the beta budget scales with it.
  virtual int host_vertex_count() const = 0;

  // Approximate induced matching on the bipartization of H/groups: left copies of the
  // groups in `left`, right copies of those in `right`. Groups are disjoint vertex sets of H.
  virtual std::vector<GroupEdge> group_matching(const GroupMembers& members, std::span<const int> left,
                                                std::span<const int> right) = 0;

  // Adjacency matrix oracle.
  virtual bool adjacent(Vertex a, Vertex b) = 0;

  // Explicit adjacency, used only to materialize undiscovered residues and to verify.
  virtual const std::vector<Vertex>& neighbors(Vertex a) const = 0;

  std::vector<Edge> edges() const;
};

}  // namespace dynmwm
