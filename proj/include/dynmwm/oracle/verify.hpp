#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dynmwm/oracle/induced_oracle.hpp"

namespace dynmwm {

struct OracleReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::size_t invalid = 0;  // returned edges outside host[S] or not a matching
  std::optional<std::vector<Vertex>> witness;
};

// Random subsets of at most max_subset vertices; compares against an exact mu(host[S]).
OracleReport verify_oracle_guarantee(InducedMatchingOracle& oracle, const BipartiteGraph& host,
                                     std::size_t trials, std::mt19937_64& rng, int max_subset = 14);

}  // namespace dynmwm
