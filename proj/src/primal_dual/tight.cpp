#include "dynmwm/primal_dual/tight.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "dynmwm/kernels/bitops.hpp"
#include "dynmwm/search/plain_graph.hpp"

namespace dynmwm {

namespace {

std::set<Edge> blossom_edge_set(const RelaxationState& s) {
  std::set<Edge> out;
  for (auto b : s.omega.nontrivial_roots()) {
    for (Edge e : s.omega.blossom_edges(b)) out.insert(make_edge(e.u, e.v));
  }
  return out;
}

// Window flags of w <= y_u + y_v <= w + 2 eps W for every edge of g, in edges() order.
std::vector<std::uint8_t> window_of_edges(const std::vector<WeightedEdge>& edges, const RelaxationState& s) {
  const std::size_t m = edges.size();
  std::vector<std::int64_t> sum(m), lo(m), hi(m);
  for (std::size_t i = 0; i < m; ++i) {
    sum[i] = s.y[edges[i].u] + s.y[edges[i].v];
    lo[i] = s.scaled(edges[i].w);
    hi[i] = lo[i] + 2 * s.unit();
  }
  std::vector<std::uint8_t> flags(m, 0);
  kernels::window_flags(sum.data(), lo.data(), hi.data(), m, flags.data());
  return flags;
}

}  // namespace

std::vector<Edge> tight_edges(const WeightedGraph& g, const RelaxationState& s) {
  const std::set<Edge> eb = blossom_edge_set(s);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    const Edge k{e.u, e.v};
    if (eb.count(k) || s.m.contains(e.u, e.v)) {
      out.push_back(k);
      continue;
    }
    const Weight se = s.s(e.u, e.v);
    if (se >= s.scaled(e.w) && se <= s.scaled(e.w) + 2 * s.unit()) out.push_back(k);
  }
  return out;
}

std::vector<Edge> simplified_tight_edges(const WeightedGraph& g, const RelaxationState& s) {
  const auto edges = g.edges();
  const auto flags = window_of_edges(edges, s);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (flags[i] || s.m.contains(edges[i].u, edges[i].v)) out.push_back({edges[i].u, edges[i].v});
  }
  return out;
}

Verdict check_inter_blossom_duals(const WeightedGraph& g, const RelaxationState& s) {
  Verdict v;
  for (const auto& e : g.edges()) {
    if (s.omega.root(e.u) == s.omega.root(e.v)) continue;
    if (s.s(e.u, e.v) != s.y[e.u] + s.y[e.v]) {
      v.fail("inter-blossom edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} carries z");
    }
  }
  return v;
}

Verdict check_tight_contraction(const WeightedGraph& g, const RelaxationState& s) {
  Verdict v;
  const int n = g.vertex_count();
  const auto a = tight_edges(g, s);
  const auto b = simplified_tight_edges(g, s);
  if (contract(n, a, s.omega).edges != contract(n, b, s.omega).edges) {
    v.fail("E_tight / Omega differs from E'_tight / Omega");
  }
  return v;
}

bool contracted_adjacency(const WeightedGraph& g, const RelaxationState& s, BlossomFamily::Id bu,
                          BlossomFamily::Id bv) {
  const auto mu = s.omega.members(bu);
  const auto mv = s.omega.members(bv);
  for (Vertex u : mu) {
    for (Vertex v : mv) {
      if (s.m.contains(u, v)) return true;
      const auto w = g.weight(u, v);
      if (!w) continue;
      const Weight sum = s.y[u] + s.y[v];
      if (sum >= s.scaled(*w) && sum <= s.scaled(*w) + 2 * s.unit()) return true;
    }
  }
  return false;
}

TightSearchGraph::TightSearchGraph(const WeightedGraph& g, const RelaxationState& s, const EpsilonExtension& layout,
                                   InducedMatchingOracle& base, ContractedQueryMode mode, std::mt19937_64& rng,
                                   int repetitions)
    : g_(&g), s_(&s), layout_(&layout), base_(&base), mode_(mode), rng_(&rng), repetitions_(repetitions),
      start_m_(s.m), start_y_(s.y) {
  const int n = g.vertex_count();
  const auto edges = g.edges();
  const auto flags = window_of_edges(edges, s);
  std::vector<Edge> simplified;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (flags[i] || s.m.contains(edges[i].u, edges[i].v)) simplified.push_back({edges[i].u, edges[i].v});
  }
  cg_ = contract(n, simplified, s.omega);
  members_.resize(cg_.vertex_count());
  for (int i = 0; i < cg_.vertex_count(); ++i) members_[i] = s.omega.members(cg_.nodes[i]);
  adj_.resize(cg_.vertex_count());
  for (Edge e : cg_.edges) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!flags[i]) continue;
    const int a = cg_.index_of_vertex[edges[i].u];
    const int b = cg_.index_of_vertex[edges[i].v];
    if (a == b) continue;
    const Edge key = make_edge(a, b);
    const Edge oriented = a < b ? Edge{edges[i].u, edges[i].v} : Edge{edges[i].v, edges[i].u};
    auto [it, fresh] = window_witness_.try_emplace(key, oriented);
    if (!fresh && oriented < it->second) it->second = oriented;
  }
  mark_.assign(n, 0);
}

Matching TightSearchGraph::contracted_matching() const { return contract_matching(cg_, start_m_); }

Edge TightSearchGraph::witness(int a, int b, const Matching& current) const {
  for (Vertex u : members_[a]) {
    const Vertex v = current.mate(u);
    if (v != kNoVertex && cg_.index_of_vertex[v] == b) return {u, v};
  }
  if (auto it = window_witness_.find(make_edge(a, b)); it != window_witness_.end()) {
    return a < b ? it->second : reversed(it->second);
  }
  for (Vertex u : members_[a]) {
    const Vertex v = start_m_.mate(u);
    if (v != kNoVertex && cg_.index_of_vertex[v] == b) return {u, v};
  }
  throw ContractViolation("no G edge behind the contracted edge");
}

bool TightSearchGraph::adjacent(Vertex a, Vertex b) {
  ++adjacency_scans_;
  for (Vertex u : members_[a]) {
    for (Vertex v : members_[b]) {
      if (start_m_.contains(u, v)) return true;
      const auto w = g_->weight(u, v);
      if (!w) continue;
      const Weight sum = start_y_[u] + start_y_[v];
      if (sum >= s_->scaled(*w) && sum <= s_->scaled(*w) + 2 * s_->unit()) return true;
    }
  }
  return false;
}

std::vector<Edge> TightSearchGraph::base_query(std::span<const Vertex> left, std::span<const Vertex> right) {
  const Weight unit = s_->unit();
  auto grid = [&](Vertex u) {
    const Weight y = start_y_[u];
    if (y % unit != 0 || y < 0 || y / unit > s_->K) {
      throw ContractViolation("dual value of vertex " + std::to_string(u) + " is off the extension grid");
    }
    return static_cast<int>(y / unit);
  };
  scratch_.clear();
  for (Vertex u : left) scratch_.push_back(layout_->copy(u, 0, grid(u)));
  for (Vertex v : right) scratch_.push_back(layout_->copy(v, 1, grid(v)));
  ++base_queries_;
  std::vector<Edge> first;
  for (Edge e : base_->query(scratch_)) {
    Edge x = layout_->side_of(e.u) == 0 ? e : reversed(e);
    first.push_back({layout_->source_of(x.u), layout_->source_of(x.v)});
  }
  ++epoch_;
  for (Vertex v : right) mark_[v] = epoch_;
  std::vector<Edge> second;
  for (Vertex u : left) {
    const Vertex v = start_m_.mate(u);
    if (v != kNoVertex && mark_[v] == epoch_) second.push_back({u, v});
  }
  return second.size() > first.size() ? second : first;
}

std::vector<GroupEdge> TightSearchGraph::group_matching(const GroupMembers& members, std::span<const int> left,
                                                        std::span<const int> right) {
  if (mode_ == ContractedQueryMode::kDirect) {
    return exact_group_matching(
        vertex_count(), [this](Vertex a) -> const std::vector<Vertex>& { return adj_[a]; }, members, left, right);
  }
  std::unordered_map<int, std::vector<Vertex>> flat;
  int gamma = 1;
  auto add = [&](int gid) {
    auto [it, fresh] = flat.try_emplace(gid);
    if (!fresh) return;
    for (Vertex x : members(gid)) it->second.insert(it->second.end(), members_[x].begin(), members_[x].end());
    gamma = std::max<int>(gamma, it->second.size());
  };
  for (int gid : left) add(gid);
  for (int gid : right) add(gid);
  gamma_seen_ = std::max(gamma_seen_, gamma);
  const int k = gamma == 1 ? 1 : repetitions_ > 0 ? repetitions_ : default_repetitions(gamma, host_vertex_count());
  auto got = sample_group_matching(
      [this](std::span<const Vertex> l, std::span<const Vertex> r) { return base_query(l, r); },
      [&flat](int gid) { return std::span<const Vertex>(flat.at(gid)); }, left, right, k, *rng_);
  for (GroupEdge& e : got) {
    e.a = cg_.index_of_vertex[e.a];
    e.b = cg_.index_of_vertex[e.b];
  }
  return got;
}

}  // namespace dynmwm
