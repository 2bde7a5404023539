#include "dynmwm/search/plain_graph.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dynmwm {

std::vector<Edge> SearchGraph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < vertex_count(); ++a) {
    for (Vertex b : neighbors(a)) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

std::vector<GroupEdge> exact_group_matching(int n, const std::function<const std::vector<Vertex>&(Vertex)>& adj,
                                            const GroupMembers& members, std::span<const int> left,
                                            std::span<const int> right) {
  if (left.empty() || right.empty()) return {};
  const int L = static_cast<int>(left.size());
  const int R = static_cast<int>(right.size());
  std::vector<int> right_slot(n, -1);
  for (int j = 0; j < R; ++j) {
    for (Vertex v : members(right[j])) right_slot[v] = j;
  }
  std::vector<std::uint8_t> side(L + R, 0);
  std::fill(side.begin() + L, side.end(), 1);
  BipartiteGraph bg(side);
  std::map<Edge, Edge> witness;
  for (int i = 0; i < L; ++i) {
    for (Vertex a : members(left[i])) {
      for (Vertex b : adj(a)) {
        const int j = right_slot[b];
        if (j < 0 || right[j] == left[i]) continue;
        Edge key{i, L + j};
        auto [it, fresh] = witness.try_emplace(key, Edge{a, b});
        if (fresh) {
          bg.add_edge(i, L + j);
        } else if (Edge{a, b} < it->second) {
          it->second = Edge{a, b};
        }
      }
    }
  }
  bg.finalize();
  HopcroftKarp hk;
  std::vector<GroupEdge> out;
  for (Edge e : hk.solve_all(bg)) {
    const Edge w = witness.at(e);
    out.push_back({left[e.u], right[e.v - L], w.u, w.v});
  }
  return out;
}

PlainSearchGraph::PlainSearchGraph(int n, std::span<const Edge> edges, GroupQueryMode mode, std::uint64_t seed,
                                   int repetitions)
    : n_(n), mode_(mode), adj_(n), bip_(bipartization(n, edges)), rng_(seed), repetitions_(repetitions) {
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) throw ContractViolation("bad search graph edge");
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
}

bool PlainSearchGraph::adjacent(Vertex a, Vertex b) {
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<GroupEdge> PlainSearchGraph::group_matching(const GroupMembers& members, std::span<const int> left,
                                                        std::span<const int> right) {
  ++queries_;
  if (mode_ == GroupQueryMode::kExact) {
    return exact_group_matching(
        n_, [this](Vertex a) -> const std::vector<Vertex>& { return adj_[a]; }, members, left, right);
  }
  int gamma = 1;
  for (int g : left) gamma = std::max<int>(gamma, members(g).size());
  for (int g : right) gamma = std::max<int>(gamma, members(g).size());
  const int k = repetitions_ > 0 ? repetitions_ : default_repetitions(gamma, host_vertex_count());
  auto base = [this](std::span<const Vertex> l, std::span<const Vertex> r) {
    std::vector<Vertex> subset(l.begin(), l.end());
    for (Vertex y : r) subset.push_back(n_ + y);
    std::vector<Edge> got = hk_.solve(bip_, subset);
    for (Edge& e : got) e.v -= n_;
    return got;
  };
  return sample_group_matching(base, members, left, right, k, rng_);
}

}  // namespace dynmwm
