#include "dynmwm/graph/blossom.hpp"

#include <algorithm>
#include <string>

namespace dynmwm {

BlossomFamily::BlossomFamily(int n) : n_(n), nodes_(n), root_(n) {
  for (int v = 0; v < n; ++v) root_[v] = v;
}

void BlossomFamily::collect_members(Id b, std::vector<Vertex>& out) const {
  if (is_trivial(b)) {
    out.push_back(b);
    return;
  }
  for (Id c : nodes_[b].children) collect_members(c, out);
}

std::vector<Vertex> BlossomFamily::members(Id b) const {
  std::vector<Vertex> out;
  out.reserve(nodes_[b].size);
  collect_members(b, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool BlossomFamily::contains(Id b, Vertex v) const {
  for (Id cur = v; cur != kNone; cur = nodes_[cur].parent) {
    if (cur == b) return true;
  }
  return false;
}

Vertex BlossomFamily::base(Id b) const {
  while (!is_trivial(b)) b = nodes_[b].children.front();
  return b;
}

std::vector<BlossomFamily::Id> BlossomFamily::ancestors(Vertex v) const {
  std::vector<Id> out;
  for (Id cur = nodes_[v].parent; cur != kNone; cur = nodes_[cur].parent) out.push_back(cur);
  return out;
}

BlossomFamily::Id BlossomFamily::add(std::vector<Id> children, std::vector<Edge> cycle) {
  const std::size_t k = children.size();
  if (k < 3 || k % 2 == 0) throw ContractViolation("a blossom needs an odd number (>= 3) of sub-blossoms");
  if (cycle.size() != k) throw ContractViolation("blossom cycle must have one edge per sub-blossom");
  std::vector<Id> sorted = children;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ContractViolation("blossom lists a sub-blossom twice");
  }
  for (Id c : children) {
    if (!is_root(c)) throw ContractViolation("sub-blossom " + std::to_string(c) + " is not a current root");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Edge e = cycle[i];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || root_[e.u] != children[i] ||
        root_[e.v] != children[(i + 1) % k]) {
      throw ContractViolation("cycle edge " + std::to_string(i) + " does not join consecutive sub-blossoms");
    }
  }
  const Id id = id_limit();
  Node node;
  node.children = std::move(children);
  node.cycle = std::move(cycle);
  node.size = 0;
  for (Id c : node.children) {
    node.size += nodes_[c].size;
    nodes_[c].parent = id;
  }
  nodes_.push_back(std::move(node));
  std::vector<Vertex> mem;
  collect_members(id, mem);
  for (Vertex v : mem) root_[v] = id;
  return id;
}

void BlossomFamily::dissolve(Id b) {
  if (is_trivial(b) || !is_root(b)) throw ContractViolation("only non-trivial root blossoms can be dissolved");
  Node& node = nodes_[b];
  node.alive = false;
  for (Id c : node.children) {
    nodes_[c].parent = kNone;
    std::vector<Vertex> mem;
    collect_members(c, mem);
    for (Vertex v : mem) root_[v] = c;
  }
}

std::vector<BlossomFamily::Id> BlossomFamily::roots() const {
  std::vector<Id> out;
  for (Id b = 0; b < id_limit(); ++b) {
    if (is_root(b)) out.push_back(b);
  }
  return out;
}

std::vector<BlossomFamily::Id> BlossomFamily::nontrivial() const {
  std::vector<Id> out;
  for (Id b = n_; b < id_limit(); ++b) {
    if (nodes_[b].alive) out.push_back(b);
  }
  return out;
}

std::vector<BlossomFamily::Id> BlossomFamily::nontrivial_roots() const {
  std::vector<Id> out;
  for (Id b = n_; b < id_limit(); ++b) {
    if (is_root(b)) out.push_back(b);
  }
  return out;
}

std::vector<Edge> BlossomFamily::blossom_edges(Id b) const {
  std::vector<Edge> out;
  std::vector<Id> stack{b};
  while (!stack.empty()) {
    Id cur = stack.back();
    stack.pop_back();
    if (is_trivial(cur)) continue;
    for (Edge e : nodes_[cur].cycle) out.push_back(make_edge(e.u, e.v));
    for (Id c : nodes_[cur].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int BlossomFamily::child_index(Id b, Vertex x) const {
  Id cur = x;
  while (cur != kNone && nodes_[cur].parent != b) cur = nodes_[cur].parent;
  if (cur == kNone) throw ContractViolation("vertex " + std::to_string(x) + " is not inside blossom");
  const auto& ch = nodes_[b].children;
  return static_cast<int>(std::find(ch.begin(), ch.end(), cur) - ch.begin());
}

std::vector<Vertex> BlossomFamily::path_to_base(Id b, Vertex x) const {
  if (!contains(b, x)) throw ContractViolation("vertex " + std::to_string(x) + " is not inside blossom");
  std::vector<Vertex> out;
  append_path_to_base(b, x, out);
  return out;
}

void BlossomFamily::append_path_from_base(Id b, Vertex x, std::vector<Vertex>& out) const {
  std::vector<Vertex> tmp;
  append_path_to_base(b, x, tmp);
  out.insert(out.end(), tmp.rbegin(), tmp.rend());
}

// Walks the cycle from the sub-blossom holding x towards children[0] in the
// direction whose first edge leaving that sub-blossom is matched.
void BlossomFamily::append_path_to_base(Id b, Vertex x, std::vector<Vertex>& out) const {
  if (is_trivial(b)) {
    out.push_back(x);
    return;
  }
  const Node& node = nodes_[b];
  const int k = static_cast<int>(node.children.size());
  const int j = child_index(b, x);
  append_path_to_base(node.children[j], x, out);
  if (j == 0) return;
  if (j % 2 == 0) {
    for (int i = j; i > 0; i -= 2) {
      append_path_from_base(node.children[i - 1], node.cycle[i - 2].v, out);
      append_path_to_base(node.children[i - 2], node.cycle[i - 2].u, out);
    }
  } else {
    for (int i = j;;) {
      const int next = i + 1;
      append_path_from_base(node.children[next], node.cycle[next].u, out);
      const int after = (next + 1) % k;
      append_path_to_base(node.children[after], node.cycle[next].v, out);
      if (after == 0) break;
      i = after;
    }
  }
}

void BlossomFamily::normalize(Id b, const Matching& m) {
  if (is_trivial(b)) return;
  Vertex base_vertex = kNoVertex;
  for (Vertex v : members(b)) {
    Vertex mate = m.mate(v);
    if (mate == kNoVertex || !contains(b, mate)) {
      if (base_vertex != kNoVertex) throw ContractViolation("matching does not respect blossom");
      base_vertex = v;
    }
  }
  if (base_vertex == kNoVertex) throw ContractViolation("blossom without base vertex");
  normalize_with_base(b, base_vertex, m);
}

void BlossomFamily::normalize_with_base(Id b, Vertex base_vertex, const Matching& m) {
  if (is_trivial(b)) return;
  Node& node = nodes_[b];
  const int k = static_cast<int>(node.children.size());
  const int j = child_index(b, base_vertex);
  auto matched = [&](Edge e) { return m.contains(e.u, e.v); };

  std::vector<Id> children(k);
  std::vector<Edge> cycle(k);
  if (matched(node.cycle[(j + 1) % k])) {
    for (int i = 0; i < k; ++i) {
      children[i] = node.children[(j + i) % k];
      cycle[i] = node.cycle[(j + i) % k];
    }
  } else {
    for (int i = 0; i < k; ++i) {
      children[i] = node.children[((j - i) % k + k) % k];
      cycle[i] = reversed(node.cycle[((j - i - 1) % k + k) % k]);
    }
  }
  for (int i = 0; i < k; ++i) {
    if (matched(cycle[i]) != (i % 2 == 1)) throw ContractViolation("matching does not respect blossom cycle");
  }
  node.children = std::move(children);
  node.cycle = std::move(cycle);
  normalize_with_base(node.children[0], base_vertex, m);
  for (int i = 1; i < k; ++i) {
    Vertex child_base = (i % 2 == 1) ? node.cycle[i].u : node.cycle[i - 1].v;
    normalize_with_base(node.children[i], child_base, m);
  }
}

bool respects(const Matching& m, const BlossomFamily& omega) {
  for (BlossomFamily::Id b : omega.nontrivial()) {
    std::size_t matched = 0;
    for (Edge e : omega.blossom_edges(b)) {
      if (m.contains(e.u, e.v)) ++matched;
    }
    if (matched != static_cast<std::size_t>(omega.size(b) / 2)) return false;
  }
  return true;
}

}  // namespace dynmwm
