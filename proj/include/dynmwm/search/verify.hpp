#pragma once

#include "dynmwm/graph/verdict.hpp"
#include "dynmwm/search/phase_search.hpp"

namespace dynmwm {

struct StructuralChecks {
  bool certificate = true;  // exact matching on H minus E_del minus F_del
};

// Checks the six output properties of a structural search on H, starting matching m0.
Verdict verify_structural_output(const SearchGraph& g, const Matching& m0, const StructuralOutput& out,
                                 const PhaseParams& params, StructuralChecks checks = {});

// True iff H minus e_del minus the removed vertices contains no augmenting path w.r.t. m.
bool no_augmenting_path(int n, std::span<const Edge> edges, std::span<const Edge> e_del,
                        std::span<const Vertex> removed, const Matching& m);

}  // namespace dynmwm
