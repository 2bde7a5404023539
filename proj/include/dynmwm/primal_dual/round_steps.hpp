#pragma once

#include <vector>

#include "dynmwm/primal_dual/state.hpp"
#include "dynmwm/primal_dual/tight.hpp"
#include "dynmwm/search/phase_search.hpp"

namespace dynmwm {

struct AugmentationReport {
  std::vector<Part> part;  // per vertex of G
  std::vector<BlossomFamily::Id> new_blossoms;
  std::size_t augmentations = 0;
  std::size_t e_del_added = 0;
  std::size_t f_del_added = 0;
};

// Lifts the search result on H back to G: applies the augmenting paths phase by phase,
// adds the new blossoms bottom-up and expands the partition, E_del' and F_del'.
AugmentationReport augmentation_and_blossom_formation(const WeightedGraph& g, RelaxationState& s,
                                                      const TightSearchGraph& h, const StructuralOutput& out);

void dual_adjustment(RelaxationState& s, std::span<const Part> part);

struct DissolutionReport {
  std::size_t dissolved = 0;
  std::size_t large = 0;
  std::size_t f_del_added = 0;
  std::size_t m_del_added = 0;
};

DissolutionReport blossom_dissolution(const WeightedGraph& g, RelaxationState& s);

}  // namespace dynmwm
