#include <doctest.h>

#include <algorithm>
#include <random>

#include "dynmwm/graph/cardinality.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/oracle/auxiliary.hpp"
#include "dynmwm/oracle/epsilon_extension.hpp"
#include "dynmwm/oracle/group_sampling.hpp"
#include "dynmwm/oracle/verify.hpp"

using namespace dynmwm;

namespace {

// Brute force mu of host[S].
std::size_t enumerate_mu(const BipartiteGraph& g, const std::vector<Vertex>& s) {
  std::vector<Edge> e;
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : s) in[v] = 1;
  for (Edge x : g.edges()) {
    if (in[x.u] && in[x.v]) e.push_back(x);
  }
  std::size_t best = 0;
  std::vector<char> used(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t acc) -> void {
    best = std::max(best, acc);
    if (acc + (e.size() - i) <= best) return;
    for (std::size_t k = i; k < e.size(); ++k) {
      if (used[e[k].u] || used[e[k].v]) continue;
      used[e[k].u] = used[e[k].v] = 1;
      self(self, k + 1, acc + 1);
      used[e[k].u] = used[e[k].v] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

class DropOne final : public InducedMatchingOracle {
 public:
  DropOne(const BipartiteGraph& g, double beta) : inner_(g), beta_(beta) {}
  int host_vertex_count() const override { return inner_.host_vertex_count(); }
  double beta() const override { return beta_; }
  std::vector<Edge> query(std::span<const Vertex> s) override {
    ++queries_;
    auto r = inner_.query(s);
    if (!r.empty()) r.pop_back();
    return r;
  }

 private:
  ExactBipartiteOracle inner_;
  double beta_;
};

BipartiteGraph random_bipartite(std::uint64_t seed, int n, double p) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> side(n);
  for (int i = 0; i < n; ++i) side[i] = i % 2;
  BipartiteGraph g(side);
  for (int a = 0; a < n; a += 2) {
    for (int b = 1; b < n; b += 2) {
      if (std::bernoulli_distribution(p)(rng)) g.add_edge(a, b);
    }
  }
  g.finalize();
  return g;
}

}  // namespace

TEST_CASE("exact bipartite oracle") {
  std::vector<std::uint8_t> side{0, 0, 0, 1, 1, 1};
  BipartiteGraph k33(side);
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  }
  k33.finalize();
  ExactBipartiteOracle o(k33);
  CHECK(o.query({}).empty());
  const std::vector<Vertex> all{0, 1, 2, 3, 4, 5};
  CHECK(o.query(all).size() == 3);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_bipartite(200 + t, 10, 0.35);
    ExactBipartiteOracle og(g);
    std::vector<Vertex> s;
    for (int v = 0; v < 10; ++v) {
      if (rng() & 1) s.push_back(v);
    }
    CHECK(og.query(s).size() == enumerate_mu(g, s));
  }
}

TEST_CASE("oracle guarantee checker") {
  const auto g = random_bipartite(9, 12, 0.4);
  std::mt19937_64 rng(1);
  ExactBipartiteOracle exact(g);
  CHECK(verify_oracle_guarantee(exact, g, 100, rng).violations == 0);
  DropOne lenient(g, 1.0 / 12);
  CHECK(verify_oracle_guarantee(lenient, g, 100, rng).violations == 0);
  DropOne strict(g, 0.0);
  const auto rep = verify_oracle_guarantee(strict, g, 100, rng);
  CHECK(rep.violations > 0);
  CHECK(rep.witness.has_value());
}

TEST_CASE("epsilon extension layout") {
  const auto eps = Epsilon::from_inverse(2);
  WeightedGraph single(2, 1);
  single.insert_edge(0, 1, 1);
  const EpsilonExtension layout(2, 1, eps);
  // grid {0, 1/2, 1}; pairs with 1 <= i/2 + j/2 <= 2, once per orientation
  const auto e = layout.edges_for(0, 1, 1);
  CHECK(e.size() == 12);
  std::size_t from_u = 0;
  for (Edge x : e) from_u += layout.source_of(x.u) == 0;
  CHECK(from_u == 6);
  CHECK(build_epsilon_extension(single, eps).graph.edge_count() == 12);

  WeightedGraph empty(5, 3);
  const auto b = build_epsilon_extension(empty, Epsilon::from_inverse(4));
  CHECK(b.graph.vertex_count() == 2 * 5 * 5);
  CHECK(b.graph.edge_count() == 0);

  // w = W, eps = 1/2: i + j in [2, 4] grid units
  const EpsilonExtension l3(2, 3, eps);
  for (Edge x : l3.edges_for(0, 1, 3)) {
    const int s = l3.grid_index_of(x.u) + l3.grid_index_of(x.v);
    CHECK(s >= 2);
    CHECK(s <= 4);
  }
}

TEST_CASE("auxiliary graph oracle") {
  // path 0 - 1 - 2 as the bipartite base: sides 0,1,0
  for (AuxMode mode : {AuxMode::kIncremental, AuxMode::kDecremental}) {
    AuxiliaryGraph aux({0, 1, 0}, mode);
    aux.insert_base_edge({0, 1});
    aux.insert_base_edge({2, 1});
    DynamicMcmOracle o(aux);
    const std::uint64_t h0 = aux.state_hash();
    const std::vector<Vertex> s01{0, 1};
    const auto got = o.query(s01);
    REQUIRE(got.size() == 1);
    CHECK(make_edge(got[0].u, got[0].v) == Edge{0, 1});
    CHECK(o.query({}).empty());
    const std::vector<Vertex> all{0, 1, 2};
    CHECK(o.query(all).size() == 1);
    CHECK(aux.state_hash() == h0);
    CHECK(aux.rollback_mismatches() == 0);
  }
}

TEST_CASE("auxiliary oracle is exact on random hosts") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto g = random_bipartite(50 + t, 12, 0.3);
    for (AuxMode mode : {AuxMode::kIncremental, AuxMode::kDecremental}) {
      AuxiliaryGraph aux(g.sides(), mode);
      for (Edge e : g.edges()) aux.insert_base_edge(e);
      DynamicMcmOracle o(aux);
      CHECK(verify_oracle_guarantee(o, g, 40, rng).violations == 0);
      CHECK(aux.rollback_mismatches() == 0);
    }
  }
}

TEST_CASE("group sampling") {
  SUBCASE("singleton groups make sampling the identity") {
    std::mt19937_64 rng(1);
    std::vector<std::vector<Vertex>> groups{{0}, {1}, {2}, {3}};
    const auto base = [](std::span<const Vertex> l, std::span<const Vertex> r) {
      std::vector<Edge> out;
      for (std::size_t i = 0; i < std::min(l.size(), r.size()); ++i) out.push_back({l[i], r[i]});
      return out;
    };
    const std::vector<int> left{0, 1}, right{2, 3};
    const auto got = sample_group_matching(
        base, [&](int g) { return std::span<const Vertex>(groups[g]); }, left, right, 1, rng);
    CHECK(got.size() == 2);
    CHECK(sample_group_matching(base, [&](int g) { return std::span<const Vertex>(groups[g]); }, {}, {}, 3, rng)
              .empty());
  }
  CHECK(default_repetitions(1, 100) == 1);
  CHECK(default_repetitions(3, 100) > 100);
}
