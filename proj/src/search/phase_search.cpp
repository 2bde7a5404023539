#include "dynmwm/search/phase_search.hpp"

#include <algorithm>
#include <set>
#include <span>

#include "dynmwm/graph/contraction.hpp"

namespace dynmwm {

std::string to_string(SearchEventKind kind) {
  switch (kind) {
    case SearchEventKind::kExtend: return "extend";
    case SearchEventKind::kOvertake: return "overtake";
    case SearchEventKind::kContract: return "contract";
    case SearchEventKind::kAugment: return "augment";
    case SearchEventKind::kBacktrack: return "backtrack";
  }
  return "?";
}

namespace {

using Id = BlossomFamily::Id;
constexpr Id kNone = BlossomFamily::kNone;

struct Structure {
  Vertex free_vertex;
  Id root_node;
  Id working;  // kNone once inactive
  int size = 1;
  bool on_hold = false;
  bool modified = false;
  bool removed = false;
};

// One phase of the structural search: alternating trees grown from every free
// vertex of the (fixed) matching m, with depth labels on matched arcs.
class Phase {
 public:
  Phase(SearchGraph& g, const Matching& m, const PhaseParams& p, int phase, int threshold,
        std::vector<SearchEvent>* events)
      : g_(g), m_(m), p_(p), phase_(phase), threshold_(threshold), events_(events), n_(g.vertex_count()),
        omega_(n_), label_(n_, p.ell_max + 1), removed_(n_, 0), identity_(n_) {
    for (Vertex v = 0; v < n_; ++v) identity_[v] = v;
    ensure(n_ - 1);
    bucket_.assign(p_.ell_max + 2, {});
    bucket_pos_.assign(n_, -1);
    bucket_label_.assign(n_, -1);
    for (Vertex v = 0; v < n_; ++v) {
      if (m_.is_free(v)) {
        const int s = static_cast<int>(st_.size());
        st_.push_back({v, v, v});
        node_struct_[v] = s;
        node_outer_[v] = 1;
      } else {
        bucket_set(v, p_.ell_max + 1);
      }
    }
    max_size_ = st_.empty() ? 0 : 1;
  }

  void run() {
    for (round_ = 1; round_ <= p_.tau_max; ++round_) {
      changed_ = false;
      for (auto& s : st_) {
        if (s.removed) continue;
        s.on_hold = s.size >= p_.limit_h;
        s.modified = false;
      }
      extend();
      contract_and_augment();
      backtrack();
      rounds_ = round_;
      if (!changed_ && p_.stop_when_quiescent) break;
    }
  }

  const std::vector<std::vector<Vertex>>& paths() const { return paths_; }
  std::size_t oracle_queries() const { return oracle_queries_; }
  std::size_t adjacency_queries() const { return adjacency_queries_; }

  PhaseStats stats() const {
    PhaseStats s;
    s.rounds = rounds_;
    s.structures = static_cast<int>(st_.size());
    for (const auto& x : st_) {
      if (x.removed) ++s.removed_structures;
      else if (x.working != kNone) ++s.active_structures;
    }
    s.m0_size = m_.size();
    s.paths = paths_.size();
    s.max_structure_size = max_size_;
    return s;
  }

  void build_output(const Matching& m_star, StructuralOutput& out) const;

 private:
  // ---- per-node storage, indexed by blossom id ----
  void ensure(Id id) {
    if (id < static_cast<Id>(node_parent_.size())) return;
    const std::size_t k = static_cast<std::size_t>(id) + 1;
    node_parent_.resize(k, kNone);
    node_arc_.resize(k, Edge{});
    node_children_.resize(k);
    node_struct_.resize(k, -1);
    node_outer_.resize(k, 0);
  }

  bool node_is_outer(Id x) const { return node_struct_[x] >= 0 && node_outer_[x]; }
  bool vertex_is_outer(Vertex v) const { return node_is_outer(omega_.root(v)); }

  // unvisited matched vertices and inner vertices of live structures
  bool vertex_non_outer(Vertex v) const {
    if (removed_[v] || m_.is_free(v)) return false;
    const Id r = omega_.root(v);
    return node_struct_[r] < 0 || !node_outer_[r];
  }

  int depth(Id outer_node) const {
    const Id p = node_parent_[outer_node];
    return p == kNone ? 0 : label_[p];
  }

  bool in_subtree(Id x, Id top) const {
    for (; x != kNone; x = node_parent_[x]) {
      if (x == top) return true;
    }
    return false;
  }

  template <typename F>
  void for_each_node(Id top, F&& f) const {
    std::vector<Id> stack{top};
    while (!stack.empty()) {
      Id x = stack.back();
      stack.pop_back();
      f(x);
      for (Id c : node_children_[x]) stack.push_back(c);
    }
  }

  void log(SearchEventKind kind, int s, int a, int b, int old_label = 0, int new_label = 0) {
    changed_ = true;
    if (events_) events_->push_back({phase_, round_, kind, s, a, b, old_label, new_label});
  }

  // ---- buckets of non-outer vertices by label ----
  void bucket_drop(Vertex v) {
    if (bucket_label_[v] < 0) return;
    auto& b = bucket_[bucket_label_[v]];
    const int pos = bucket_pos_[v];
    b[pos] = b.back();
    bucket_pos_[b[pos]] = pos;
    b.pop_back();
    bucket_label_[v] = -1;
    bucket_pos_[v] = -1;
  }
  void bucket_set(Vertex v, int label) {
    bucket_drop(v);
    bucket_label_[v] = label;
    bucket_pos_[v] = static_cast<int>(bucket_[label].size());
    bucket_[label].push_back(v);
  }

  std::vector<Vertex> non_outer_above(int min_label) const {
    std::vector<Vertex> out;
    if (p_.buckets == BucketMode::kIncremental) {
      for (int j = std::max(0, min_label); j <= p_.ell_max + 1; ++j) {
        out.insert(out.end(), bucket_[j].begin(), bucket_[j].end());
      }
    } else {
      for (Vertex v = 0; v < n_; ++v) {
        if (vertex_non_outer(v) && label_[v] >= min_label) out.push_back(v);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  GroupMembers singletons() const {
    return [this](int v) { return std::span<const Vertex>(&identity_[v], 1); };
  }

  // ---- Extend ----
  bool extend_valid(Vertex u, Vertex v, int i) const {
    if (removed_[u] || removed_[v]) return false;
    const Id U = omega_.root(u);
    const int s = node_struct_[U];
    if (s < 0 || !node_outer_[U]) return false;
    const Structure& S = st_[s];
    if (S.removed || S.modified || S.on_hold || S.working != U) return false;
    if (depth(U) != i) return false;
    if (!vertex_non_outer(v)) return false;
    return label_[v] > i + 1;
  }

  void extend() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < p_.ell_max; ++i) {
        std::vector<Vertex> left;
        for (const auto& S : st_) {
          if (S.removed || S.modified || S.on_hold || S.working == kNone) continue;
          if (depth(S.working) != i) continue;
          auto mem = omega_.members(S.working);
          left.insert(left.end(), mem.begin(), mem.end());
        }
        if (left.empty()) continue;
        std::sort(left.begin(), left.end());
        std::vector<Vertex> right = non_outer_above(i + 2);
        if (right.empty()) continue;
        ++oracle_queries_;
        auto got = g_.group_matching(singletons(), left, right);
        if (static_cast<int>(got.size()) < threshold_) {
          record_residue(left, right);
          continue;
        }
        for (const GroupEdge& e : got) {
          if (!extend_valid(e.a, e.b, i)) continue;
          overtake(e.a, e.b);
          progress = true;
        }
      }
    }
  }

  void overtake(Vertex u, Vertex v) {
    const Id U = omega_.root(u);
    const int t = node_struct_[U];
    const Vertex w = m_.mate(v);
    const int new_label = depth(U) + 1;
    const int old_label = label_[v];
    if (new_label >= old_label) throw ContractViolation("overtake must lower the label");

    if (node_struct_[v] < 0) {
      node_parent_[v] = U;
      node_arc_[v] = {u, v};
      node_children_[U].push_back(v);
      node_struct_[v] = t;
      node_outer_[v] = 0;
      node_parent_[w] = v;
      node_arc_[w] = {v, w};
      node_children_[v] = {w};
      node_struct_[w] = t;
      node_outer_[w] = 1;
      st_[t].size += 2;
      bucket_drop(w);
      st_[t].working = w;
    } else {
      const int donor = node_struct_[v];
      const Id P = node_parent_[v];
      const Id dw = st_[donor].working;
      if (in_subtree(U, v)) throw ContractViolation("overtake would close a cycle in the tree");
      const bool dw_inside = dw != kNone && in_subtree(dw, v);
      auto& kids = node_children_[P];
      kids.erase(std::find(kids.begin(), kids.end(), v));
      node_parent_[v] = U;
      node_arc_[v] = {u, v};
      node_children_[U].push_back(v);
      if (donor != t) {
        int moved = 0;
        for_each_node(v, [&](Id x) {
          node_struct_[x] = t;
          moved += omega_.size(x);
        });
        st_[donor].size -= moved;
        st_[t].size += moved;
      }
      const Id W = node_children_[v].front();
      if (donor != t && dw_inside) {
        // the active path moves along with the subtree
        st_[t].working = dw;
        st_[donor].working = P;
        st_[donor].modified = true;
      } else {
        st_[t].working = W;
      }
    }
    label_[v] = new_label;
    bucket_set(v, new_label);
    st_[t].modified = true;
    max_size_ = std::max(max_size_, st_[t].size);
    log(SearchEventKind::kOvertake, t, u, v, old_label, new_label);
  }

  // ---- Contract and augment ----
  void contract(Vertex a, Vertex b) {
    const Id U = omega_.root(a);
    const Id X = omega_.root(b);
    const int s = node_struct_[U];
    std::vector<char> mark(node_parent_.size(), 0);
    std::vector<Id> up_u;
    for (Id x = U; x != kNone; x = node_parent_[x]) {
      up_u.push_back(x);
      mark[x] = 1;
    }
    std::vector<Id> up_x;
    Id lca = X;
    while (lca != kNone && !mark[lca]) {
      up_x.push_back(lca);
      lca = node_parent_[lca];
    }
    if (lca == kNone || !node_outer_[lca]) throw ContractViolation("contract needs two outer nodes of one tree");

    std::vector<Id> cyc;
    for (Id x : up_u) {
      cyc.push_back(x);
      if (x == lca) break;
    }
    std::reverse(cyc.begin(), cyc.end());
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < cyc.size(); ++i) edges.push_back(node_arc_[cyc[i]]);
    edges.push_back({a, b});
    for (Id c : up_x) {
      cyc.push_back(c);
      edges.push_back(reversed(node_arc_[c]));
    }

    const Id parent = node_parent_[lca];
    const Edge arc = node_arc_[lca];
    const Id B = omega_.add(cyc, edges);
    ensure(B);
    std::vector<char> on_cycle(node_parent_.size(), 0);
    for (Id c : cyc) on_cycle[c] = 1;
    node_parent_[B] = parent;
    node_arc_[B] = arc;
    if (parent != kNone) {
      auto& kids = node_children_[parent];
      *std::find(kids.begin(), kids.end(), lca) = B;
    }
    for (Id c : cyc) {
      for (Id ch : node_children_[c]) {
        if (on_cycle[ch]) continue;
        node_children_[B].push_back(ch);
        node_parent_[ch] = B;
      }
      if (omega_.is_trivial(c) && !node_outer_[c]) bucket_drop(c);
    }
    node_struct_[B] = s;
    node_outer_[B] = 1;
    Structure& S = st_[s];
    if (S.root_node == lca) S.root_node = B;
    const Id wk = S.working;
    if (wk == kNone || on_cycle[wk] || !in_subtree(wk, B)) S.working = B;
    S.modified = true;
    log(SearchEventKind::kContract, s, a, b);
  }

  void remove_structure(int s) {
    Structure& S = st_[s];
    for_each_node(S.root_node, [&](Id x) {
      for (Vertex v : omega_.members(x)) {
        removed_[v] = 1;
        bucket_drop(v);
      }
    });
    S.removed = true;
    S.working = kNone;
  }

  std::vector<Id> chain_to_root(Id x) const {
    std::vector<Id> out;
    for (; x != kNone; x = node_parent_[x]) out.push_back(x);
    return out;
  }

  void augment(Vertex a, Vertex b) {
    const Id U = omega_.root(a);
    const Id X = omega_.root(b);
    std::vector<Id> roots = chain_to_root(U);
    std::reverse(roots.begin(), roots.end());
    std::vector<Edge> witnesses;
    for (std::size_t i = 1; i < roots.size(); ++i) witnesses.push_back(node_arc_[roots[i]]);
    witnesses.push_back({a, b});
    for (Id c : chain_to_root(X)) {
      if (node_parent_[c] != kNone) witnesses.push_back(reversed(node_arc_[c]));
      roots.push_back(c);
    }
    paths_.push_back(lift_augmenting_path(roots, witnesses, omega_, m_));
    const int s1 = node_struct_[U];
    const int s2 = node_struct_[X];
    remove_structure(s1);
    remove_structure(s2);
    log(SearchEventKind::kAugment, s1, a, b);
  }

  std::vector<Vertex> outer_vertices_of(int s, Id skip) const {
    std::vector<Vertex> out;
    for_each_node(st_[s].root_node, [&](Id x) {
      if (x == skip || !node_outer_[x]) return;
      auto mem = omega_.members(x);
      out.insert(out.end(), mem.begin(), mem.end());
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  bool local_contract(int s) {
    const Id W = st_[s].working;
    auto mine = omega_.members(W);
    auto others = outer_vertices_of(s, W);
    for (Vertex a : mine) {
      for (Vertex b : others) {
        ++adjacency_queries_;
        if (m_.mate(a) != b && g_.adjacent(a, b)) {
          contract(a, b);
          return true;
        }
      }
    }
    return false;
  }

  void contract_and_augment() {
    for (int s = 0; s < static_cast<int>(st_.size()); ++s) {
      while (!st_[s].removed && st_[s].working != kNone && local_contract(s)) {
      }
    }
    while (true) {
      std::vector<int> groups;
      std::vector<std::vector<Vertex>> mem;
      std::vector<int> slot(node_parent_.size(), -1);
      for (int s = 0; s < static_cast<int>(st_.size()); ++s) {
        if (st_[s].removed) continue;
        for_each_node(st_[s].root_node, [&](Id x) {
          if (node_outer_[x]) groups.push_back(x);
        });
      }
      if (groups.empty()) return;
      std::sort(groups.begin(), groups.end());
      for (int gid : groups) {
        slot[gid] = static_cast<int>(mem.size());
        mem.push_back(omega_.members(gid));
      }
      GroupMembers members = [&](int gid) { return std::span<const Vertex>(mem[slot[gid]]); };
      ++oracle_queries_;
      auto got = g_.group_matching(members, groups, groups);
      if (static_cast<int>(got.size()) < threshold_) {
        record_outer_residue();
        return;
      }
      for (const GroupEdge& e : got) {
        if (removed_[e.a] || removed_[e.b]) continue;
        if (!vertex_is_outer(e.a) || !vertex_is_outer(e.b)) continue;
        const Id A = omega_.root(e.a);
        const Id B = omega_.root(e.b);
        if (A == B || m_.mate(e.a) == e.b) continue;
        if (node_struct_[A] == node_struct_[B]) {
          contract(e.a, e.b);
        } else {
          augment(e.a, e.b);
        }
      }
    }
  }

  // ---- Backtrack ----
  void backtrack() {
    for (int s = 0; s < static_cast<int>(st_.size()); ++s) {
      Structure& S = st_[s];
      if (S.removed || S.on_hold || S.modified || S.working == kNone) continue;
      const Id p = node_parent_[S.working];
      const Id from = S.working;
      S.working = p == kNone ? kNone : node_parent_[p];
      log(SearchEventKind::kBacktrack, s, from, S.working);
    }
  }

  // ---- undiscovered edges left behind by stopped queries ----
  void record_residue(std::span<const Vertex> left, std::span<const Vertex> right) {
    if (!p_.materialize_residue) return;
    std::vector<char> in_right(n_, 0);
    for (Vertex v : right) in_right[v] = 1;
    for (Vertex u : left) {
      for (Vertex v : g_.neighbors(u)) {
        if (in_right[v]) residue_.insert(make_edge(u, v));
      }
    }
  }

  void record_outer_residue() {
    if (!p_.materialize_residue) return;
    for (Vertex a = 0; a < n_; ++a) {
      if (removed_[a] || !vertex_is_outer(a)) continue;
      for (Vertex b : g_.neighbors(a)) {
        if (b <= a || removed_[b] || !vertex_is_outer(b)) continue;
        if (omega_.root(a) == omega_.root(b)) continue;
        residue_.insert({a, b});
      }
    }
  }

  SearchGraph& g_;
  const Matching& m_;
  const PhaseParams& p_;
  int phase_;
  int threshold_;
  std::vector<SearchEvent>* events_;
  int n_;
  int round_ = 0;
  int rounds_ = 0;
  bool changed_ = false;

  BlossomFamily omega_;
  std::vector<Id> node_parent_;
  std::vector<Edge> node_arc_;  // (x in parent node, y in this node)
  std::vector<std::vector<Id>> node_children_;
  std::vector<int> node_struct_;
  std::vector<std::uint8_t> node_outer_;

  std::vector<int> label_;  // label of the matched arc (v, mate v)
  std::vector<std::uint8_t> removed_;
  std::vector<Vertex> identity_;
  std::vector<Structure> st_;
  int max_size_ = 0;

  std::vector<std::vector<Vertex>> bucket_;
  std::vector<int> bucket_pos_;
  std::vector<int> bucket_label_;

  std::vector<std::vector<Vertex>> paths_;
  std::set<Edge> residue_;
  std::size_t oracle_queries_ = 0;
  std::size_t adjacency_queries_ = 0;
};

void dissolve_down(BlossomFamily& omega, Id b) {
  const std::vector<Id> kids = omega.children(b);
  omega.dissolve(b);
  for (Id c : kids) {
    if (!omega.is_trivial(c)) dissolve_down(omega, c);
  }
}

void Phase::build_output(const Matching& m_star, StructuralOutput& out) const {
  std::vector<char> active(n_, 0), active_inner(n_, 0);
  for (const auto& S : st_) {
    if (S.removed || S.working == kNone) continue;
    for (Id x = S.working; x != kNone; x = node_parent_[x]) {
      for (Vertex v : omega_.members(x)) {
        active[v] = 1;
        if (!node_outer_[x]) active_inner[v] = 1;
      }
    }
  }
  std::vector<int> level(n_, -1);
  out.level_sizes.assign(p_.ell_max + 1, 0);
  for (Vertex v = 0; v < n_; ++v) {
    if (removed_[v] || active[v] || !vertex_is_outer(v)) continue;
    level[v] = depth(omega_.root(v));
    if (level[v] > p_.ell_max) throw ContractViolation("outer depth beyond ell_max");
    ++out.level_sizes[level[v]];
  }
  out.i_star = static_cast<int>(std::min_element(out.level_sizes.begin(), out.level_sizes.end()) -
                                out.level_sizes.begin());

  out.part.assign(n_, Part::kUnfound);
  for (Vertex v = 0; v < n_; ++v) {
    if (level[v] >= 0 && level[v] <= out.i_star) out.part[v] = Part::kOut;
  }
  for (Vertex v = 0; v < n_; ++v) {
    if (out.part[v] != Part::kOut && !m_star.is_free(v) && out.part[m_star.mate(v)] == Part::kOut) {
      out.part[v] = Part::kIn;
    }
  }

  out.omega = omega_;
  for (Id b : out.omega.nontrivial_roots()) {
    bool inside = true;
    for (Vertex v : out.omega.members(b)) inside = inside && out.part[v] == Part::kOut;
    if (!inside) dissolve_down(out.omega, b);
  }
  out.matching = m_star;

  out.removed_vertices = out.active_vertices = out.active_inner_vertices = 0;
  out.f_del.clear();
  out.e_del_vertices.clear();
  for (Vertex v = 0; v < n_; ++v) {
    out.removed_vertices += removed_[v];
    out.active_vertices += active[v];
    out.active_inner_vertices += active_inner[v];
    if (active[v] && m_star.is_free(v)) out.f_del.push_back(v);
    if (active_inner[v] || removed_[v] || level[v] == out.i_star) out.e_del_vertices.push_back(v);
  }
  out.residue.assign(residue_.begin(), residue_.end());

  std::set<Edge> del(residue_.begin(), residue_.end());
  std::vector<char> hot(n_, 0);
  for (Vertex v : out.e_del_vertices) hot[v] = 1;
  for (Vertex a = 0; a < n_; ++a) {
    for (Vertex b : g_.neighbors(a)) {
      if (a < b && (hot[a] || hot[b]) && !m_star.contains(a, b)) del.insert({a, b});
    }
  }
  out.e_del.assign(del.begin(), del.end());
}

}  // namespace

StructuralOutput run_structural_search(SearchGraph& g, const Matching& m0, const PhaseParams& params) {
  const int n = g.vertex_count();
  if (m0.vertex_count() != n) throw ContractViolation("matching does not match the search graph");
  const int threshold = params.stop_threshold(g.host_vertex_count());
  const int cap = params.phase_cap();
  StructuralOutput out;
  std::vector<SearchEvent>* events = params.record_events ? &out.events : nullptr;
  Matching m = m0;
  for (int phase = 1; phase <= cap; ++phase) {
    Phase ph(g, m, params, phase, threshold, events);
    ph.run();
    PhaseStats stats = ph.stats();
    out.phases.push_back(stats);
    out.oracle_queries += ph.oracle_queries();
    out.adjacency_queries += ph.adjacency_queries();
    Matching next = m;
    std::vector<char> used(n, 0);
    for (const auto& path : ph.paths()) {
      for (Vertex v : path) {
        if (used[v]) throw ContractViolation("augmenting paths of one phase overlap");
        used[v] = 1;
      }
      augment_in_place(next, path);
    }
    out.paths_by_phase.push_back(ph.paths());
    const bool done = stats.removed_structures <= params.removal_budget(n);
    if (done || phase == cap) {
      out.phase_cap_hit = !done;
      ph.build_output(next, out);
      break;
    }
    m = std::move(next);
  }
  return out;
}

}  // namespace dynmwm
