#pragma once

#include <iosfwd>
#include <vector>

#include "dynmwm/dynamic/driver.hpp"

namespace dynmwm {

// Lines "+ u v w" and "- u v"; '#' starts a comment.
std::vector<UpdateEvent> read_update_stream(std::istream& is);
void write_update_stream(std::ostream& os, const std::vector<UpdateEvent>& events);

// Throws ContractViolation when an event is invalid for g (or for the mode).
void validate_update(const WeightedGraph& g, const UpdateEvent& ev, DynamicMode mode);
void apply_to_graph(WeightedGraph& g, const UpdateEvent& ev);

}  // namespace dynmwm
