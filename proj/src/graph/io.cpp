#include "dynmwm/graph/io.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace dynmwm {

WeightedGraph read_graph(std::istream& in) {
  long long n = 0, m = 0, W = 0;
  if (!(in >> n >> m >> W) || n < 0 || m < 0 || W < 1) throw ContractViolation("bad graph header, expected `n m W`");
  WeightedGraph g(static_cast<int>(n), W);
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0, w = 0;
    if (!(in >> u >> v >> w)) throw ContractViolation("graph truncated at edge " + std::to_string(i));
    g.insert_edge(static_cast<Vertex>(u), static_cast<Vertex>(v), w);
  }
  return g;
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.max_weight() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

}  // namespace dynmwm
