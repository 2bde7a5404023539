#pragma once

#include <iosfwd>

#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

// Header `n m W`, then m lines `u v w`, 0-indexed.
WeightedGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedGraph& g);

}  // namespace dynmwm
