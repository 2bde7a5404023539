#include "dynmwm/primal_dual/certificate.hpp"

#include <vector>

#include "dynmwm/graph/cardinality.hpp"

namespace dynmwm {

DualityBound duality_certificate(const WeightedGraph& g, const RelaxationState& s, const Matching* other) {
  DualityBound d;
  const double K = static_cast<double>(s.K);
  const int n = s.vertex_count();
  d.matching_weight = static_cast<double>(matching_weight(g, s.m));

  Weight dual = 0;
  for (Vertex u = 0; u < n; ++u) dual += s.y[u];
  for (auto b : s.omega.nontrivial()) dual += s.z_of(b) * (s.omega.size(b) / 2);
  d.dual_objective = dual / K;

  // lower chain: w(M) >= sum_{e in M} s_e - slack_tight, and sum_{e in M} s_e = dual - sum of free y
  Weight slack = 0;
  std::size_t in_mdel = 0;
  for (Edge e : s.m.edges()) {
    if (s.m_del.count(make_edge(e.u, e.v))) ++in_mdel;
  }
  slack += 2 * s.unit() * static_cast<Weight>(s.m.size() - in_mdel);
  slack += s.K * s.W * static_cast<Weight>(in_mdel);
  for (Vertex u = 0; u < n; ++u) {
    if (s.m.is_free(u)) slack += s.y[u];
  }
  d.slack = slack / K;
  d.lower = d.dual_objective - d.slack;

  std::vector<Edge> del(s.e_del.begin(), s.e_del.end());
  d.deleted = static_cast<double>(s.W) * matching_number(n, del);
  d.upper = d.dual_objective + d.deleted;
  d.gap = d.upper - d.lower;

  d.lower_holds = d.matching_weight + 1e-9 >= d.lower;
  if (other) {
    d.other_weight = static_cast<double>(matching_weight(g, *other));
    d.upper_holds = *d.other_weight <= d.upper + 1e-9;
  }
  return d;
}

}  // namespace dynmwm
