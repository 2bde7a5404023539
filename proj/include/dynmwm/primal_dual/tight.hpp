#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "dynmwm/graph/contraction.hpp"
#include "dynmwm/oracle/epsilon_extension.hpp"
#include "dynmwm/oracle/induced_oracle.hpp"
#include "dynmwm/primal_dual/state.hpp"
#include "dynmwm/search/search_graph.hpp"

namespace dynmwm {

// E_tight: non-blossom edges with w <= s <= w + 2 eps W, plus M and every E_B.
std::vector<Edge> tight_edges(const WeightedGraph& g, const RelaxationState& s);
// E'_tight: edges with w <= y_u + y_v <= w + 2 eps W, plus M.
std::vector<Edge> simplified_tight_edges(const WeightedGraph& g, const RelaxationState& s);

// Every edge between distinct root blossoms has s = y_u + y_v.
Verdict check_inter_blossom_duals(const WeightedGraph& g, const RelaxationState& s);
// E_tight / Omega and E'_tight / Omega coincide.
Verdict check_tight_contraction(const WeightedGraph& g, const RelaxationState& s);

enum class ContractedQueryMode {
  kSampled,  // sampled representatives over the oracle on G^eps, plus the matched part
  kDirect,   // exact matching on the materialized contracted graph
};

// H = G'_tight / Omega frozen at the start of a round, served to the structural search.
class TightSearchGraph final : public SearchGraph {
 public:
  TightSearchGraph(const WeightedGraph& g, const RelaxationState& s, const EpsilonExtension& layout,
                   InducedMatchingOracle& base, ContractedQueryMode mode, std::mt19937_64& rng,
                   int repetitions = 0);

  int vertex_count() const override { return cg_.vertex_count(); }
  int host_vertex_count() const override { return base_->host_vertex_count(); }
  std::vector<GroupEdge> group_matching(const GroupMembers& members, std::span<const int> left,
                                        std::span<const int> right) override;
  bool adjacent(Vertex a, Vertex b) override;
  const std::vector<Vertex>& neighbors(Vertex a) const override { return adj_[a]; }

  const ContractedGraph& contracted() const { return cg_; }
  BlossomFamily::Id node(int x) const { return cg_.nodes[x]; }
  int index_of(Vertex v) const { return cg_.index_of_vertex[v]; }
  std::span<const Vertex> members(int x) const { return members_[x]; }
  Matching contracted_matching() const;

  // G edge realizing the H edge (a, b), oriented from node(a): the matched edge
  // when the two blossoms are matched in `current`, else the smallest window edge,
  // else the round-start matched edge.
  Edge witness(int a, int b, const Matching& current) const;

  std::size_t base_queries() const { return base_queries_; }
  std::size_t adjacency_scans() const { return adjacency_scans_; }
  int max_group_size_seen() const { return gamma_seen_; }

 private:
  std::vector<Edge> base_query(std::span<const Vertex> left, std::span<const Vertex> right);

  const WeightedGraph* g_;
  const RelaxationState* s_;
  const EpsilonExtension* layout_;
  InducedMatchingOracle* base_;
  ContractedQueryMode mode_;
  std::mt19937_64* rng_;
  int repetitions_;
  Matching start_m_;
  std::vector<Weight> start_y_;
  ContractedGraph cg_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::vector<Vertex>> adj_;
  std::map<Edge, Edge> window_witness_;  // key (a < b) in H, value oriented from a
  std::vector<Vertex> scratch_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::size_t base_queries_ = 0;
  std::size_t adjacency_scans_ = 0;
  int gamma_seen_ = 1;
};

// True iff some pair across the two root blossoms is a window edge or matched.
bool contracted_adjacency(const WeightedGraph& g, const RelaxationState& s, BlossomFamily::Id bu,
                          BlossomFamily::Id bv);

}  // namespace dynmwm
