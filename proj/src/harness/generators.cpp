#include "dynmwm/harness/generators.hpp"

#include <algorithm>
#include <random>

namespace dynmwm {

WeightedGraph random_graph(std::uint64_t seed, int n, double density, Weight W) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(density, 0.0, 1.0));
  std::uniform_int_distribution<Weight> weight(1, W);
  WeightedGraph g(n, W);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.insert_edge(u, v, weight(rng));
    }
  }
  return g;
}

std::vector<UpdateEvent> random_update_stream(std::uint64_t seed, const WeightedGraph& g0, std::size_t length,
                                              DynamicMode mode) {
  std::mt19937_64 rng(seed);
  WeightedGraph g = g0;
  const int n = g.vertex_count();
  std::uniform_int_distribution<Weight> weight(1, g.max_weight());
  std::vector<UpdateEvent> out;

  if (mode == DynamicMode::kDecremental) {
    auto edges = g.edge_pairs();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (std::size_t i = 0; i < edges.size() && out.size() < length; ++i) {
      out.push_back({UpdateKind::kDelete, edges[i].u, edges[i].v, 0, out.size()});
    }
    return out;
  }

  std::vector<Edge> absent;
  while (out.size() < length) {
    absent.clear();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!g.has_edge(u, v)) absent.push_back({u, v});
      }
    }
    const auto present = g.edge_pairs();
    bool insert = mode == DynamicMode::kIncremental || present.empty() ||
                  (!absent.empty() && std::bernoulli_distribution(0.5)(rng));
    if (insert && absent.empty()) break;
    UpdateEvent ev;
    ev.index = out.size();
    if (insert) {
      const Edge e = absent[std::uniform_int_distribution<std::size_t>(0, absent.size() - 1)(rng)];
      ev = {UpdateKind::kInsert, e.u, e.v, weight(rng), out.size()};
      g.insert_edge(e.u, e.v, ev.w);
    } else {
      const Edge e = present[std::uniform_int_distribution<std::size_t>(0, present.size() - 1)(rng)];
      ev = {UpdateKind::kDelete, e.u, e.v, 0, out.size()};
      g.delete_edge(e.u, e.v);
    }
    out.push_back(ev);
  }
  return out;
}

BitVector random_bits(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(std::clamp(density, 0.0, 1.0));
  BitVector v(n);
  for (int i = 0; i < n; ++i) v.set(i, coin(rng));
  return v;
}

BooleanMatrix random_matrix(std::uint64_t seed, int n, double density) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(std::clamp(density, 0.0, 1.0));
  BooleanMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m.set(i, j, coin(rng));
  }
  return m;
}

std::vector<OmvOp> random_omv_stream(std::uint64_t seed, int n, std::size_t updates, std::size_t queries,
                                     double query_density) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> index(0, n - 1);
  std::vector<OmvOp> ops;
  const std::size_t gap = queries == 0 ? updates : updates / queries;
  std::size_t done = 0;
  for (std::size_t q = 0; q < queries || done < updates; ++q) {
    for (std::size_t k = 0; k < gap && done < updates; ++k, ++done) {
      OmvOp op;
      op.kind = OmvOpKind::kUpdate;
      op.i = index(rng);
      op.j = index(rng);
      op.b = std::bernoulli_distribution(0.5)(rng);
      ops.push_back(std::move(op));
    }
    if (q < queries) {
      OmvOp op;
      op.kind = OmvOpKind::kQuery;
      op.v = random_bits(rng, n, query_density);
      ops.push_back(std::move(op));
    }
  }
  return ops;
}

}  // namespace dynmwm
