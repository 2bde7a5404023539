#include <doctest.h>

#include <sstream>

#include "dynmwm/dynamic/stream.hpp"
#include "dynmwm/graph/io.hpp"
#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/experiment.hpp"
#include "dynmwm/harness/generators.hpp"

using namespace dynmwm;

TEST_CASE("exact matchers on small cases") {
  WeightedGraph tri(3, 3);
  tri.insert_edge(0, 1, 3);
  tri.insert_edge(1, 2, 2);
  tri.insert_edge(0, 2, 2);
  CHECK(exact_mwm(tri).value == 3);
  CHECK(enumerate_mwm(tri).value == 3);

  WeightedGraph c4(4, 1);
  c4.insert_edge(0, 1, 1);
  c4.insert_edge(1, 2, 1);
  c4.insert_edge(2, 3, 1);
  c4.insert_edge(0, 3, 1);
  CHECK(exact_mwm(c4).value == 2);
  CHECK(memo_mwm(c4).value == 2);

  CHECK_THROWS_AS(exact_mwm(WeightedGraph(21, 1)), ContractViolation);
  CHECK_THROWS_AS(enumerate_mwm(WeightedGraph(11, 1)), ContractViolation);
}

TEST_CASE("subset DP, enumeration and the memoized DP agree") {
  for (int seed = 0; seed < 50; ++seed) {
    const WeightedGraph g = random_graph(seed, 10, 0.4, 7);
    const auto dp = exact_mwm(g);
    CHECK(dp.value == enumerate_mwm(g).value);
    CHECK(matching_weight(g, dp.matching) == dp.value);
    CHECK(is_valid_matching(g, dp.matching));
  }
  for (int seed = 0; seed < 60; ++seed) {
    const WeightedGraph g = random_graph(500 + seed, 14 + seed % 7, 0.3, 9);
    CHECK(exact_mwm(g).value == memo_mwm(g).value);
  }
}

TEST_CASE("generators") {
  std::stringstream a, b;
  write_graph(a, random_graph(42, 15, 0.3, 6));
  write_graph(b, random_graph(42, 15, 0.3, 6));
  CHECK(a.str() == b.str());
  CHECK(random_graph(1, 10, 0.0, 3).edge_count() == 0);

  const WeightedGraph g = random_graph(5, 12, 0.4, 3);
  const auto dec = random_update_stream(6, g, 1000, DynamicMode::kDecremental);
  CHECK(dec.size() == g.edge_count());
  std::set<Edge> seen;
  for (const auto& ev : dec) {
    CHECK(ev.kind == UpdateKind::kDelete);
    CHECK(seen.insert(make_edge(ev.u, ev.v)).second);
  }
  for (const auto& ev : random_update_stream(6, g, 50, DynamicMode::kIncremental)) {
    CHECK(ev.kind == UpdateKind::kInsert);
  }
}

TEST_CASE("experiments") {
  ExperimentConfig c;
  c.n = 12;
  c.seed = 3;
  std::stringstream rep;
  const auto s = run_experiment(c, &rep);
  CHECK(s.ok);
  CHECK(s.summary.contains("mu_w"));
  CHECK(s.summary["gap"].get<double>() <= s.summary["bound"].get<double>());
  // determinism
  std::stringstream rep2;
  run_experiment(c, &rep2);
  CHECK(rep.str() == rep2.str());

  c.mode = ExperimentMode::kFully;
  c.n = 16;
  CHECK(run_experiment(c).ok);

  c.mode = ExperimentMode::kOmv;
  c.eps = Epsilon::from_inverse(16);
  const auto o = run_experiment(c);
  CHECK(o.ok);
  CHECK(o.summary["queries"].get<std::size_t>() == 16);

  c.mode = ExperimentMode::kStatic;
  c.eps = Epsilon::from_inverse(4);
  c.alpha = 0.5;
  CHECK_NOTHROW(run_experiment(c));
  c.alpha = 0;
  CHECK_THROWS(run_experiment(c));
}
