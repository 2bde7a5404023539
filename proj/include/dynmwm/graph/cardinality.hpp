#pragma once

#include <span>
#include <vector>

#include "dynmwm/graph/types.hpp"

namespace dynmwm {

// Exact maximum cardinality matching on a general graph (Edmonds, via Boost.Graph).
std::vector<Edge> maximum_cardinality_matching(int n, std::span<const Edge> edges);
std::size_t matching_number(int n, std::span<const Edge> edges);

}  // namespace dynmwm
