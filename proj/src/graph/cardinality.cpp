#include "dynmwm/graph/cardinality.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace dynmwm {

namespace {
using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;
}  // namespace

std::vector<Edge> maximum_cardinality_matching(int n, std::span<const Edge> edges) {
  BoostGraph g(n);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw ContractViolation("bad edge passed to matching solver");
    }
    boost::add_edge(e.u, e.v, g);
  }
  std::vector<BoostVertex> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  const BoostVertex none = boost::graph_traits<BoostGraph>::null_vertex();
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v) {
    if (mate[v] != none && static_cast<int>(mate[v]) > v) out.push_back({v, static_cast<Vertex>(mate[v])});
  }
  return out;
}

std::size_t matching_number(int n, std::span<const Edge> edges) {
  if (n == 0 || edges.empty()) return 0;
  return maximum_cardinality_matching(n, edges).size();
}

}  // namespace dynmwm
