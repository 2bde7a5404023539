#include "dynmwm/graph/contraction.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace dynmwm {

int ContractedGraph::find_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{i, j});
  if (it == edges.end() || *it != Edge{i, j}) return -1;
  return static_cast<int>(it - edges.begin());
}

ContractedGraph contract(int n, std::span<const Edge> edges, const BlossomFamily& omega) {
  if (omega.vertex_count() != n) throw ContractViolation("blossom family size does not match graph");
  ContractedGraph cg;
  cg.nodes = omega.roots();
  std::vector<int> index_of_root(omega.id_limit(), -1);
  for (int i = 0; i < cg.vertex_count(); ++i) index_of_root[cg.nodes[i]] = i;
  cg.index_of_vertex.resize(n);
  for (Vertex v = 0; v < n; ++v) cg.index_of_vertex[v] = index_of_root[omega.root(v)];

  std::map<Edge, Edge> best;
  for (Edge e : edges) {
    int a = cg.index_of_vertex[e.u];
    int b = cg.index_of_vertex[e.v];
    if (a == b) continue;
    Edge key = make_edge(a, b);
    // witness oriented from the smaller contracted index
    Edge witness = a < b ? Edge{e.u, e.v} : Edge{e.v, e.u};
    auto [it, inserted] = best.try_emplace(key, witness);
    if (!inserted && witness < it->second) it->second = witness;
  }
  cg.edges.reserve(best.size());
  cg.witness.reserve(best.size());
  for (const auto& [key, witness] : best) {
    cg.edges.push_back(key);
    cg.witness.push_back(witness);
  }
  return cg;
}

ContractedGraph contract(const WeightedGraph& g, const BlossomFamily& omega) {
  std::vector<Edge> e = g.edge_pairs();
  return contract(g.vertex_count(), e, omega);
}

std::vector<Vertex> lift_augmenting_path(std::span<const BlossomFamily::Id> roots,
                                         std::span<const Edge> witnesses,
                                         const BlossomFamily& omega, const Matching& m) {
  const std::size_t L = witnesses.size();
  if (L == 0 || roots.size() != L + 1) throw ContractViolation("contracted path needs L+1 blossoms and L edges");
  if (L % 2 == 0) throw ContractViolation("augmenting path must have odd length");
  for (std::size_t i = 0; i < L; ++i) {
    const Edge w = witnesses[i];
    if (omega.root(w.u) != roots[i] || omega.root(w.v) != roots[i + 1]) {
      throw ContractViolation("witness " + std::to_string(i) + " does not join consecutive blossoms");
    }
    if ((i % 2 == 1) && !m.contains(w.u, w.v)) {
      throw ContractViolation("matched step " + std::to_string(i) + " does not carry a matched edge");
    }
  }

  std::vector<Vertex> path;
  auto append = [&path](std::vector<Vertex> piece, bool reverse) {
    if (reverse) std::reverse(piece.begin(), piece.end());
    path.insert(path.end(), piece.begin(), piece.end());
  };
  append(omega.path_to_base(roots[0], witnesses[0].u), true);
  for (std::size_t i = 1; i < L; ++i) {
    const Vertex entry = witnesses[i - 1].v;
    const Vertex exit = witnesses[i].u;
    if ((i - 1) % 2 == 0) {
      append(omega.path_to_base(roots[i], entry), false);
    } else {
      append(omega.path_to_base(roots[i], exit), true);
    }
  }
  append(omega.path_to_base(roots[L], witnesses[L - 1].v), false);

  std::string why;
  if (!is_augmenting_path(m, path, &why)) throw ContractViolation("lifted path is not augmenting: " + why);
  return path;
}

std::vector<Vertex> lift_augmenting_path(const ContractedGraph& cg, std::span<const int> path,
                                         const BlossomFamily& omega, const Matching& m) {
  if (path.size() < 2) throw ContractViolation("contracted path too short");
  std::vector<BlossomFamily::Id> roots;
  roots.reserve(path.size());
  for (int i : path) roots.push_back(cg.nodes.at(i));
  std::vector<Edge> witnesses;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int a = path[i];
    const int b = path[i + 1];
    if (i % 2 == 1) {
      Edge found{};
      bool ok = false;
      for (Vertex x : omega.members(cg.nodes[a])) {
        Vertex y = m.mate(x);
        if (y != kNoVertex && cg.index_of_vertex[y] == b) {
          found = Edge{x, y};
          ok = true;
          break;
        }
      }
      if (!ok) throw ContractViolation("no matched edge between contracted vertices");
      witnesses.push_back(found);
    } else {
      int k = cg.find_edge(a, b);
      if (k < 0) throw ContractViolation("contracted path uses a non-edge");
      Edge w = cg.witness[k];
      witnesses.push_back(a < b ? w : reversed(w));
    }
  }
  return lift_augmenting_path(roots, witnesses, omega, m);
}

Matching contract_matching(const ContractedGraph& cg, const Matching& m) {
  Matching out(cg.vertex_count());
  for (Edge e : m.edges()) {
    int a = cg.index_of_vertex[e.u];
    int b = cg.index_of_vertex[e.v];
    if (a == b) continue;
    if (!out.is_free(a) || !out.is_free(b)) throw ContractViolation("matching does not respect blossoms");
    out.add(a, b);
  }
  return out;
}

}  // namespace dynmwm
