#pragma once

#include <span>
#include <vector>

#include "dynmwm/graph/blossom.hpp"
#include "dynmwm/graph/matching.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

// G / Omega. Contracted vertex i stands for the root blossom nodes[i].
struct ContractedGraph {
  std::vector<BlossomFamily::Id> nodes;  // ascending root id
  std::vector<int> index_of_vertex;      // original vertex -> contracted index
  std::vector<Edge> edges;               // (i < j), lexicographic
  std::vector<Edge> witness;             // lexicographically smallest original edge behind edges[k]

  int vertex_count() const { return static_cast<int>(nodes.size()); }
  // Index into edges, or -1.
  int find_edge(int i, int j) const;
};

ContractedGraph contract(int n, std::span<const Edge> edges, const BlossomFamily& omega);
ContractedGraph contract(const WeightedGraph& g, const BlossomFamily& omega);

// Lifts an augmenting path of G/Omega given as root blossoms roots[0..L] and one
// original witness edge per step (witnesses[i] runs from roots[i] to roots[i+1]).
// Matched steps must carry the matched edge itself.
std::vector<Vertex> lift_augmenting_path(std::span<const BlossomFamily::Id> roots,
                                         std::span<const Edge> witnesses,
                                         const BlossomFamily& omega, const Matching& m);

// Same, with the path given as contracted indices of cg; unmatched steps use the
// back-map witness and matched steps use the matched edge between the two blossoms.
std::vector<Vertex> lift_augmenting_path(const ContractedGraph& cg, std::span<const int> path,
                                         const BlossomFamily& omega, const Matching& m);

// M / Omega expressed on contracted indices of cg.
Matching contract_matching(const ContractedGraph& cg, const Matching& m);

}  // namespace dynmwm
