#include <doctest.h>

#include <sstream>

#include "dynmwm/dynamic/stream.hpp"
#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/generators.hpp"

using namespace dynmwm;

TEST_CASE("lazy rule between recomputes") {
  WeightedGraph g(8, 4);
  for (Vertex u = 0; u < 8; u += 2) g.insert_edge(u, u + 1, 4);
  g.insert_edge(1, 2, 1);
  // eps n = 2: recompute after every second update
  DynamicDriver d(g, Epsilon::from_inverse(4), DynamicMode::kFully);
  REQUIRE(d.epoch_length() == 2);
  REQUIRE(d.matching().size() == 4);
  const Matching before = d.matching();

  d.apply({UpdateKind::kDelete, 2, 3, 0, 0});
  CHECK(d.recomputes() == 1);
  CHECK(d.matching().size() == before.size() - 1);
  CHECK_FALSE(d.matching().contains(2, 3));
  Matching expect = before;
  expect.remove(2, 3);
  CHECK(d.matching() == expect);

  DynamicDriver d2(g, Epsilon::from_inverse(4), DynamicMode::kFully);
  d2.apply({UpdateKind::kInsert, 0, 7, 4, 0});
  CHECK(d2.matching() == d2.epoch_matching());
  CHECK(d2.recomputes() == 1);
  CHECK(d.extension_in_sync());
}

TEST_CASE("mode constraints and invalid events") {
  WeightedGraph g(4, 2);
  g.insert_edge(0, 1, 2);
  DynamicDriver inc(g, Epsilon::from_inverse(4), DynamicMode::kIncremental);
  CHECK_THROWS_AS(inc.apply({UpdateKind::kDelete, 0, 1, 0, 0}), ContractViolation);
  CHECK_THROWS_AS(inc.apply({UpdateKind::kInsert, 0, 1, 1, 0}), ContractViolation);
  DynamicDriver dec(g, Epsilon::from_inverse(4), DynamicMode::kDecremental);
  CHECK_THROWS_AS(dec.apply({UpdateKind::kInsert, 2, 3, 1, 0}), ContractViolation);
  CHECK_THROWS_AS(dec.apply({UpdateKind::kDelete, 2, 3, 0, 0}), ContractViolation);
}

TEST_CASE("empty graph epoch") {
  DynamicDriver d(WeightedGraph(6, 3), Epsilon::from_inverse(4), DynamicMode::kFully);
  CHECK(d.matching().size() == 0);
  d.recompute();
  CHECK(d.matching().size() == 0);
}

TEST_CASE("update stream io") {
  const WeightedGraph g = random_graph(3, 10, 0.3, 5);
  const auto ev = random_update_stream(4, g, 20, DynamicMode::kFully);
  std::stringstream ss;
  ss << "# comment\n";
  write_update_stream(ss, ev);
  const auto back = read_update_stream(ss);
  REQUIRE(back.size() == ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) {
    CHECK(back[i].kind == ev[i].kind);
    CHECK(back[i].u == ev[i].u);
    CHECK(back[i].v == ev[i].v);
  }
  std::stringstream bad("* 1 2\n");
  CHECK_THROWS(read_update_stream(bad));
}

TEST_CASE("partially dynamic modes keep the extension and roll back exactly") {
  for (auto mode : {DynamicMode::kIncremental, DynamicMode::kDecremental, DynamicMode::kFully}) {
    const WeightedGraph g = random_graph(21, 16, mode == DynamicMode::kIncremental ? 0.1 : 0.4, 4);
    DynamicDriver d(g, Epsilon::from_inverse(4), mode);
    const auto stream = random_update_stream(22, g, 3 * d.epoch_length(), mode);
    std::size_t edges = g.edge_count();
    for (const auto& ev : stream) {
      d.apply(ev);
      CHECK(d.extension_in_sync());
      if (mode == DynamicMode::kIncremental) CHECK(d.graph().edge_count() >= edges);
      if (mode == DynamicMode::kDecremental) CHECK(d.graph().edge_count() <= edges);
      edges = d.graph().edge_count();
      CHECK(is_valid_matching(d.graph(), d.matching()));
    }
    CHECK(d.auxiliary().rollback_mismatches() == 0);
    CHECK(d.recomputes() == 4);
  }
}

TEST_CASE("static graph across epochs stays within the additive bound") {
  const WeightedGraph g = random_graph(8, 14, 0.35, 4);
  DynamicDriver d(g, Epsilon::from_inverse(4), DynamicMode::kFully);
  const Weight mu = exact_mwm(g).value;
  const double bound = 4 * 0.25 * 4 * 14;
  for (int i = 0; i < 3; ++i) {
    d.recompute();
    CHECK(mu - matching_weight(g, d.matching()) <= bound);
  }
}
