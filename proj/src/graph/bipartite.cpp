#include "dynmwm/graph/bipartite.hpp"

#include <algorithm>
#include <limits>

namespace dynmwm {

BipartiteGraph::BipartiteGraph(std::vector<std::uint8_t> side) : side_(std::move(side)), adj_(side_.size()) {}

void BipartiteGraph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count()) {
    throw ContractViolation("bipartite edge endpoint out of range");
  }
  if (side_[a] == side_[b]) throw ContractViolation("bipartite edge inside one side");
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  ++edge_count_;
}

void BipartiteGraph::finalize() {
  edge_count_ = 0;
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool BipartiteGraph::has_edge(Vertex a, Vertex b) const {
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex a = 0; a < vertex_count(); ++a) {
    for (Vertex b : adj_[a]) {
      if (a < b) out.push_back({a, b});
    }
  }
  return out;
}

BipartiteGraph bipartization(int n, std::span<const Edge> edges) {
  std::vector<std::uint8_t> side(2 * n, 0);
  std::fill(side.begin() + n, side.end(), 1);
  BipartiteGraph b(std::move(side));
  for (Edge e : edges) {
    b.add_edge(e.u, n + e.v);
    b.add_edge(e.v, n + e.u);
  }
  b.finalize();
  return b;
}

BipartiteGraph bipartization(const WeightedGraph& g) {
  std::vector<Edge> e = g.edge_pairs();
  return bipartization(g.vertex_count(), e);
}

namespace {
constexpr int kInf = std::numeric_limits<int>::max();
}

std::vector<Edge> HopcroftKarp::solve(const BipartiteGraph& g, std::span<const Vertex> subset) {
  g_ = &g;
  const int n = g.vertex_count();
  if (static_cast<int>(stamp_.size()) < n) {
    stamp_.resize(n, 0);
    mate_.resize(n, kNoVertex);
    dist_.resize(n, kInf);
    cursor_.resize(n, 0);
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  lefts_.clear();
  for (Vertex v : subset) {
    if (v < 0 || v >= n) throw ContractViolation("subset vertex out of range");
    stamp_[v] = epoch_;
    mate_[v] = kNoVertex;
    if (g.side(v) == 0) lefts_.push_back(v);
  }
  std::sort(lefts_.begin(), lefts_.end());
  lefts_.erase(std::unique(lefts_.begin(), lefts_.end()), lefts_.end());

  // greedy start keeps the number of phases small on sparse inputs
  for (Vertex u : lefts_) {
    for (Vertex w : g.neighbors(u)) {
      if (in_subset(w) && mate_[w] == kNoVertex) {
        mate_[u] = w;
        mate_[w] = u;
        break;
      }
    }
  }
  while (bfs()) {
    for (Vertex u : lefts_) cursor_[u] = 0;
    for (Vertex u : lefts_) {
      if (mate_[u] == kNoVertex) dfs(u);
    }
  }
  std::vector<Edge> out;
  for (Vertex u : lefts_) {
    if (mate_[u] != kNoVertex) out.push_back({u, mate_[u]});
  }
  return out;
}

std::vector<Edge> HopcroftKarp::solve_all(const BipartiteGraph& g) {
  std::vector<Vertex> all(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) all[i] = i;
  return solve(g, all);
}

bool HopcroftKarp::bfs() {
  queue_.clear();
  for (Vertex u : lefts_) {
    if (mate_[u] == kNoVertex) {
      dist_[u] = 0;
      queue_.push_back(u);
    } else {
      dist_[u] = kInf;
    }
  }
  bool found = false;
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    Vertex u = queue_[head];
    for (Vertex w : g_->neighbors(u)) {
      if (!in_subset(w)) continue;
      Vertex back = mate_[w];
      if (back == kNoVertex) {
        found = true;
      } else if (dist_[back] == kInf) {
        dist_[back] = dist_[u] + 1;
        queue_.push_back(back);
      }
    }
  }
  return found;
}

bool HopcroftKarp::dfs(Vertex u) {
  const auto& nb = g_->neighbors(u);
  for (std::uint32_t& i = cursor_[u]; i < nb.size(); ++i) {
    Vertex w = nb[i];
    if (!in_subset(w)) continue;
    Vertex back = mate_[w];
    if (back == kNoVertex || (dist_[back] == dist_[u] + 1 && dfs(back))) {
      mate_[u] = w;
      mate_[w] = u;
      ++i;
      return true;
    }
  }
  dist_[u] = kInf;
  return false;
}

}  // namespace dynmwm
