#include "dynmwm/oracle/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dynmwm {

OracleReport verify_oracle_guarantee(InducedMatchingOracle& oracle, const BipartiteGraph& host,
                                     std::size_t trials, std::mt19937_64& rng, int max_subset) {
  OracleReport report;
  const int n = host.vertex_count();
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  HopcroftKarp hk;
  for (std::size_t t = 0; t < trials; ++t) {
    std::shuffle(all.begin(), all.end(), rng);
    const int size = std::uniform_int_distribution<int>(0, std::min(n, max_subset))(rng);
    std::vector<Vertex> subset(all.begin(), all.begin() + size);
    std::sort(subset.begin(), subset.end());

    const std::vector<Edge> got = oracle.query(subset);
    ++report.trials;
    std::set<Vertex> used;
    bool valid = true;
    for (Edge e : got) {
      const bool in_s = std::binary_search(subset.begin(), subset.end(), e.u) &&
                        std::binary_search(subset.begin(), subset.end(), e.v);
      if (!in_s || !host.has_edge(e.u, e.v) || !used.insert(e.u).second || !used.insert(e.v).second) valid = false;
    }
    const double mu = static_cast<double>(hk.solve(host, subset).size());
    const double need = oracle.alpha() * mu - oracle.beta() * oracle.host_vertex_count();
    const bool short_result = static_cast<double>(got.size()) + 1e-9 < need;
    if (!valid) ++report.invalid;
    if (short_result) ++report.violations;
    if ((!valid || short_result) && !report.witness) report.witness = subset;
  }
  return report;
}

}  // namespace dynmwm
