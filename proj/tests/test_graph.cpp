#include <doctest.h>

#include <random>
#include <sstream>

#include "dynmwm/graph/bipartite.hpp"
#include "dynmwm/graph/blossom.hpp"
#include "dynmwm/graph/cardinality.hpp"
#include "dynmwm/graph/contraction.hpp"
#include "dynmwm/graph/epsilon.hpp"
#include "dynmwm/graph/io.hpp"
#include "dynmwm/graph/matching.hpp"
#include "dynmwm/harness/generators.hpp"

using namespace dynmwm;

TEST_CASE("weighted graph construction") {
  WeightedGraph g(3, 4);
  g.insert_edge(0, 1, 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.weight(1, 0) == 2);
  CHECK_THROWS_AS(g.insert_edge(0, 1, 2), ContractViolation);
  CHECK_THROWS_AS(g.insert_edge(0, 0, 1), ContractViolation);
  CHECK_THROWS_AS(g.insert_edge(1, 2, 5), ContractViolation);
  g.delete_edge(0, 1);
  CHECK_THROWS_AS(g.delete_edge(0, 1), ContractViolation);
}

TEST_CASE("graph io round trip") {
  const WeightedGraph g = random_graph(7, 9, 0.4, 5);
  std::stringstream ss;
  write_graph(ss, g);
  const WeightedGraph h = read_graph(ss);
  CHECK(h.edges() == g.edges());
  CHECK(h.max_weight() == g.max_weight());
}

TEST_CASE("epsilon parsing") {
  CHECK(Epsilon::parse("1/8").inverse() == 8);
  CHECK(Epsilon::parse("0.25").inverse() == 4);
  CHECK(Epsilon::from_inverse(8).rounds() == 4);
  CHECK_THROWS(Epsilon::parse("1/3"));
  CHECK_THROWS(Epsilon::parse("0.3"));
}

TEST_CASE("augmentation") {
  Matching m(4);
  const std::vector<Vertex> one{0, 1};
  augment_in_place(m, one);
  CHECK(m.contains(0, 1));

  Matching p(4);
  p.add(1, 2);
  const std::vector<Vertex> path{0, 1, 2, 3};
  const Matching q = augment_along(p, path);
  CHECK(q.contains(0, 1));
  CHECK(q.contains(2, 3));
  CHECK(q.size() == 2);

  const std::vector<Vertex> bad{0, 1, 3, 2};
  CHECK_THROWS_AS(augment_along(p, bad), ContractViolation);
}

TEST_CASE("contraction") {
  SUBCASE("triangle collapses to a point") {
    BlossomFamily om(3);
    om.add({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    const auto cg = contract(3, e, om);
    CHECK(cg.vertex_count() == 1);
    CHECK(cg.edges.empty());
  }
  SUBCASE("identity") {
    BlossomFamily om(3);
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    const auto cg = contract(3, e, om);
    CHECK(cg.vertex_count() == 3);
    CHECK(cg.edges == e);
  }
  SUBCASE("5-cycle with a 3-blossom") {
    BlossomFamily om(5);
    om.add({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
    const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    const auto cg = contract(5, e, om);
    // B = {0,1,2}, then 3, 4: B-3, 3-4, B-4
    CHECK(cg.vertex_count() == 3);
    CHECK(cg.edges.size() == 3);
  }
}

TEST_CASE("respects and lifting through a blossom") {
  BlossomFamily om(4);
  Matching m(4);
  om.add({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(respects(m, om));
  m.add(1, 2);
  CHECK(respects(m, om));
  const BlossomFamily::Id b = om.root(0);
  CHECK(om.base(b) == 0);

  // free vertex 3 hangs off each blossom member in turn
  for (Vertex entry : {0, 1, 2}) {
    const std::vector<BlossomFamily::Id> roots{3, b};
    const std::vector<Edge> wit{{3, entry}};
    const auto path = lift_augmenting_path(roots, wit, om, m);
    std::string why;
    CHECK_MESSAGE(is_augmenting_path(m, path, &why), why);
    CHECK(path.front() == 3);
    CHECK(path.back() == 0);
  }
}

TEST_CASE("bipartization matching number against Edmonds") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const WeightedGraph g = random_graph(100 + t, 10, 0.3, 1);
    const auto b = bipartization(g);
    HopcroftKarp hk;
    const auto mb = hk.solve_all(b);
    // B_G is the double cover: 2 mu(G) <= mu(B_G) <= 3 mu(G)
    const std::size_t mu = matching_number(10, g.edge_pairs());
    CHECK(mb.size() >= 2 * mu);
    CHECK(mb.size() <= 3 * mu);
  }
}
