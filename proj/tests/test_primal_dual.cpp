#include <doctest.h>

#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/primal_dual/certificate.hpp"
#include "dynmwm/primal_dual/framework.hpp"
#include "dynmwm/primal_dual/round_steps.hpp"
#include "dynmwm/primal_dual/tight.hpp"

using namespace dynmwm;

TEST_CASE("initial state") {
  WeightedGraph g(2, 4);
  g.insert_edge(0, 1, 4);
  const auto eps = Epsilon::from_inverse(4);
  const RelaxationState s = init_state(g, eps);
  // scaled: y = K W / 2 = 8 each, edge needs K w = 16 <= 16 <= 16 + 2W
  CHECK(s.y[0] == 8);
  CHECK(s.s(0, 1) == 16);
  CHECK(tight_edges(g, s).size() == 1);

  WeightedGraph light(2, 4);
  light.insert_edge(0, 1, 1);  // w < W (1 - 2 eps)
  CHECK(tight_edges(light, init_state(light, eps)).empty());
  CHECK(check_relaxation(g, s, round_params(s, 0)).verdict.ok());
}

TEST_CASE("fault injection in the relaxation checker") {
  WeightedGraph g(3, 4);
  g.insert_edge(0, 1, 4);
  RelaxationState s = init_state(g, Epsilon::from_inverse(4));
  s.y[2] += 1;  // free vertex off the grid
  const auto rep = check_relaxation(g, s, round_params(s, 0));
  // both the grid rule and the free-vertex level rule see vertex 2, nothing else does
  CHECK_FALSE(rep.verdict.ok());
  for (const auto& v : rep.verdict.violations) CHECK(v.find(" 2") != std::string::npos);
}

TEST_CASE("dual adjustment cancels on matched and intra-blossom edges") {
  WeightedGraph g(3, 4);
  g.insert_edge(0, 1, 4);
  g.insert_edge(1, 2, 4);
  g.insert_edge(0, 2, 4);
  RelaxationState s = init_state(g, Epsilon::from_inverse(4));
  s.m.add(1, 2);
  const auto b = s.omega.add({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  s.set_z(b, 0);
  const Weight before = s.s(1, 2);
  dual_adjustment(s, std::vector<Part>{Part::kOut, Part::kOut, Part::kOut});
  CHECK(s.s(1, 2) == before);
  CHECK(s.z_of(b) == 2 * s.unit());

  // z = 0 root blossoms are removed with M and y untouched
  RelaxationState t = init_state(g, Epsilon::from_inverse(4));
  t.m.add(1, 2);
  t.omega.add({0, 1, 2}, {{0, 1}, {1, 2}, {2, 0}});
  const auto y = t.y;
  const auto rep = blossom_dissolution(g, t);
  CHECK(rep.dissolved == 1);
  CHECK(t.omega.nontrivial_roots().empty());
  CHECK(t.y == y);
  CHECK(t.m.contains(1, 2));
}

TEST_CASE("framework end to end") {
  SUBCASE("triangle of equal weights") {
    WeightedGraph g(3, 4);
    g.insert_edge(0, 1, 4);
    g.insert_edge(1, 2, 4);
    g.insert_edge(0, 2, 4);
    FrameworkConfig cfg;
    bool ok = true;
    cfg.observer = [&](const RoundRecord& r, const RelaxationState& s) {
      ok = ok && check_relaxation(g, s, round_params(s, r.t)).verdict.ok();
    };
    const auto res = run_framework(g, Epsilon::from_inverse(4), cfg);
    CHECK(ok);
    CHECK(matching_weight(g, res.state.m) == 4);
  }
  SUBCASE("empty graph") {
    const auto res = run_framework(WeightedGraph(5, 3), Epsilon::from_inverse(4));
    CHECK(res.state.m.size() == 0);
    CHECK(res.trace.size() == 2);
  }
  SUBCASE("certificate sandwiches the optimum") {
    for (int seed = 0; seed < 20; ++seed) {
      const WeightedGraph g = random_graph(300 + seed, 12, 0.3, 8);
      const auto res = run_framework(g, Epsilon::from_inverse(4));
      const auto opt = exact_mwm(g);
      const auto d = duality_certificate(g, res.state, &opt.matching);
      CHECK(d.lower_holds);
      CHECK(d.upper_holds);
      CHECK(opt.value - matching_weight(g, res.state.m) <= d.gap + 1e-9);
    }
  }
  SUBCASE("direct and sampled query modes agree on the invariants") {
    const WeightedGraph g = random_graph(5, 16, 0.3, 4);
    for (auto mode : {ContractedQueryMode::kDirect, ContractedQueryMode::kSampled}) {
      FrameworkConfig cfg;
      cfg.query_mode = mode;
      bool ok = true;
      cfg.observer = [&](const RoundRecord& r, const RelaxationState& s) {
        ok = ok && check_relaxation(g, s, round_params(s, r.t)).verdict.ok() &&
             check_inter_blossom_duals(g, s).ok() && check_tight_contraction(g, s).ok();
      };
      run_framework(g, Epsilon::from_inverse(8), cfg);
      CHECK(ok);
    }
  }
}
