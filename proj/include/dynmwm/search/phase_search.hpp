#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynmwm/graph/blossom.hpp"
#include "dynmwm/graph/matching.hpp"
#include "dynmwm/search/params.hpp"
#include "dynmwm/search/search_graph.hpp"

namespace dynmwm {

enum class Part : std::uint8_t { kUnfound = 0, kIn = 1, kOut = 2 };

enum class SearchEventKind : std::uint8_t { kExtend, kOvertake, kContract, kAugment, kBacktrack };

struct SearchEvent {
  int phase;
  int round;
  SearchEventKind kind;
  int structure;
  int a;
  int b;
  int old_label;  // overtake only
  int new_label;
};

std::string to_string(SearchEventKind kind);

struct PhaseStats {
  int rounds = 0;
  int structures = 0;
  int removed_structures = 0;
  int active_structures = 0;  // at the end of the phase
  std::size_t m0_size = 0;
  std::size_t paths = 0;
  int max_structure_size = 0;
};

struct StructuralOutput {
  std::vector<Part> part;  // per vertex of H
  BlossomFamily omega;     // Omega_out; non-trivial ids ascending = creation order
  Matching matching;       // M*
  std::vector<Vertex> f_del;

  // E_del in symbolic form: residue pairs plus vertices whose unmatched edges are deleted.
  std::vector<Edge> residue;
  std::vector<Vertex> e_del_vertices;
  std::vector<Edge> e_del;  // materialized, normalized, sorted

  // Vertex-disjoint augmenting paths in H, grouped by the phase that found them.
  std::vector<std::vector<std::vector<Vertex>>> paths_by_phase;

  std::vector<PhaseStats> phases;
  bool phase_cap_hit = false;
  int i_star = 0;
  std::vector<int> level_sizes;  // |V_i|, i = 0..ell_max
  std::size_t removed_vertices = 0;
  std::size_t active_vertices = 0;
  std::size_t active_inner_vertices = 0;  // |U|
  std::vector<SearchEvent> events;
  std::size_t oracle_queries = 0;
  std::size_t adjacency_queries = 0;
};

StructuralOutput run_structural_search(SearchGraph& g, const Matching& m0, const PhaseParams& params);

}  // namespace dynmwm
