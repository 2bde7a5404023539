#include "dynmwm/oracle/induced_oracle.hpp"

namespace dynmwm {

std::vector<Edge> ExactBipartiteOracle::query(std::span<const Vertex> subset) {
  ++queries_;
  if (subset.empty()) return {};
  return hk_.solve(*host_, subset);
}

}  // namespace dynmwm
