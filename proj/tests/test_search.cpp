#include <doctest.h>

#include <algorithm>
#include <set>

#include "dynmwm/graph/cardinality.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/search/plain_graph.hpp"
#include "dynmwm/search/verify.hpp"

using namespace dynmwm;

namespace {

struct Run {
  std::vector<Edge> edges;
  Matching m0;
  PhaseParams params;
  StructuralOutput out;
  Verdict verdict;
};

Run search(int n, std::vector<Edge> edges, Matching m0, double eps = 0.25, double beta = 0.0,
           GroupQueryMode mode = GroupQueryMode::kExact, std::uint64_t seed = 1) {
  Run r{std::move(edges), std::move(m0), PhaseParams::make(eps, -1.0, beta), {}, {}};
  PlainSearchGraph h(n, r.edges, mode, seed);
  r.out = run_structural_search(h, r.m0, r.params);
  r.verdict = verify_structural_output(h, r.m0, r.out, r.params);
  return r;
}

std::size_t total_paths(const StructuralOutput& out) {
  std::size_t c = 0;
  for (const auto& p : out.paths_by_phase) c += p.size();
  return c;
}

// Greedy maximal matching used as a non-trivial start.
Matching greedy(int n, const std::vector<Edge>& edges) {
  Matching m(n);
  for (Edge e : edges) {
    if (m.is_free(e.u) && m.is_free(e.v)) m.add(e.u, e.v);
  }
  return m;
}

bool has(const Verdict& v, const std::string& what) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](const std::string& s) { return s.find(what) != std::string::npos; });
}

}  // namespace

TEST_CASE("phase search small cases") {
  SUBCASE("single edge") {
    const auto r = search(2, {{0, 1}}, Matching(2));
    CHECK(r.verdict.ok());
    CHECK(total_paths(r.out) == 1);
    CHECK(r.out.matching.contains(0, 1));
  }
  SUBCASE("planted length-3 path") {
    Matching m0(5);
    m0.add(1, 2);
    const auto r = search(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, m0);
    CHECK(r.verdict.ok());
    CHECK(r.out.matching.size() == 2);
  }
  SUBCASE("maximum start") {
    Matching m0(4);
    m0.add(0, 1);
    m0.add(2, 3);
    const auto r = search(4, {{0, 1}, {1, 2}, {2, 3}}, m0);
    CHECK(r.verdict.ok());
    CHECK(total_paths(r.out) == 0);
    CHECK(r.out.f_del.empty());
  }
  SUBCASE("no free vertices") {
    Matching m0(2);
    m0.add(0, 1);
    const auto r = search(2, {{0, 1}}, m0);
    CHECK(total_paths(r.out) == 0);
    CHECK(r.verdict.ok());
  }
  SUBCASE("odd cycle hanging off a free vertex") {
    // 0 free, 1-2 and 3-4 matched, cycle 1-2-3-4-1 reached from 0 via 1
    Matching m0(5);
    m0.add(1, 2);
    m0.add(3, 4);
    const auto r = search(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, m0);
    CHECK(r.verdict.ok());
    CHECK(r.out.matching.size() == 2);
  }
  SUBCASE("star with a free centre") {
    // centre 0 free; leaves 1,3,5 matched to 2,4,6
    Matching m0(7);
    m0.add(1, 2);
    m0.add(3, 4);
    m0.add(5, 6);
    const auto r = search(7, {{0, 1}, {0, 3}, {0, 5}, {1, 2}, {3, 4}, {5, 6}}, m0);
    CHECK(r.verdict.ok());
    CHECK(total_paths(r.out) == 0);
  }
  SUBCASE("beta threshold boundary") {
    const auto r = search(2, {{0, 1}}, Matching(2), 0.25, 0.25);
    CHECK(r.params.stop_threshold(4) == 1);
    CHECK(total_paths(r.out) == 1);
  }
}

TEST_CASE("phase search on random graphs passes the verifier") {
  for (int seed = 0; seed < 60; ++seed) {
    const int n = 8 + seed % 30;
    const WeightedGraph g = random_graph(1000 + seed, n, 0.15 + 0.01 * (seed % 10), 1);
    const auto edges = g.edge_pairs();
    const Matching m0 = seed % 2 ? greedy(n, edges) : Matching(n);
    const GroupQueryMode mode = seed % 3 == 0 ? GroupQueryMode::kSampled : GroupQueryMode::kExact;
    const auto r = search(n, edges, m0, seed % 4 == 0 ? 0.125 : 0.25, 0.0, mode, seed);
    INFO("seed " << seed);
    for (const auto& v : r.verdict.violations) MESSAGE(v);
    CHECK(r.verdict.ok());
    // with no E_del at all the result would also be maximum; in general it is a lower bound
    CHECK(r.out.matching.size() <= matching_number(n, edges));
  }
}

TEST_CASE("verifier detects injected faults") {
  bool saw3 = false;
  bool saw2 = false;
  for (int seed = 0; seed < 40 && !(saw2 && saw3); ++seed) {
    const int n = 16;
    const WeightedGraph g = random_graph(77 + seed, n, 0.2, 1);
    const auto edges = g.edge_pairs();
    // a positive stop threshold leaves residue edges in E_del
    const auto r = search(n, edges, greedy(n, edges), 0.25, 0.2);
    REQUIRE(r.verdict.ok());
    PlainSearchGraph h(n, r.edges);

    // an out-out or out-unfound edge dropped from E_del, in both the symbolic and the materialized form
    auto rematerialize = [&](StructuralOutput& o) {
      std::set<Edge> del(o.residue.begin(), o.residue.end());
      std::vector<char> hot(n, 0);
      for (Vertex x : o.e_del_vertices) hot[x] = 1;
      for (Edge e : r.edges) {
        const Edge k = make_edge(e.u, e.v);
        if ((hot[k.u] || hot[k.v]) && !o.matching.contains(k.u, k.v)) del.insert(k);
      }
      o.e_del.assign(del.begin(), del.end());
    };
    for (Edge e : r.out.e_del) {
      if (saw3) break;
      const Part a = r.out.part[e.u], b = r.out.part[e.v];
      if (a != Part::kOut && b != Part::kOut) continue;
      if (a == Part::kIn || b == Part::kIn) continue;
      if (r.out.omega.root(e.u) == r.out.omega.root(e.v)) continue;
      StructuralOutput bad = r.out;
      std::erase(bad.residue, e);
      std::erase(bad.e_del_vertices, e.u);
      std::erase(bad.e_del_vertices, e.v);
      rematerialize(bad);
      saw3 = has(verify_structural_output(h, r.m0, bad, r.params, {false}), "edge leaves V_out badly");
    }
    // a matched edge split between V_out and V_unfound
    const auto r0 = search(n, edges, greedy(n, edges));
    REQUIRE(r0.verdict.ok());
    for (Vertex u = 0; u < n && !saw2; ++u) {
      const Vertex v = r0.out.matching.mate(u);
      if (v == kNoVertex || r0.out.part[u] != Part::kOut) continue;
      if (r0.out.omega.root(u) == r0.out.omega.root(v)) continue;
      StructuralOutput bad = r0.out;
      bad.part[v] = Part::kUnfound;
      saw2 = has(verify_structural_output(h, r0.m0, bad, r0.params, {false}), "matched edge breaks the partition rule");
    }
  }
  CHECK(saw2);
  CHECK(saw3);
}
