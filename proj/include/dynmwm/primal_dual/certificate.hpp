#pragma once

#include <optional>

#include "dynmwm/primal_dual/state.hpp"

namespace dynmwm {

// Both sides of the weak-duality sandwich, in real (unscaled) units.
struct DualityBound {
  double matching_weight = 0;  // w(M)
  double dual_objective = 0;   // sum y + sum z floor(|B|/2)
  double slack = 0;            // 2 lambda W |M \ M_del| + W |M_del| + sum of free y
  double deleted = 0;          // W mu(E_del)
  double gap = 0;              // dual_objective + deleted - (w(M) ... lower chain)
  double lower = 0;            // dual_objective - slack, bounds w(M) from below
  double upper = 0;            // dual_objective + deleted, bounds any w(M') from above
  std::optional<double> other_weight;
  bool lower_holds = true;
  bool upper_holds = true;
};

DualityBound duality_certificate(const WeightedGraph& g, const RelaxationState& s,
                                 const Matching* other = nullptr);

}  // namespace dynmwm
