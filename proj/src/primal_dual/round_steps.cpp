#include "dynmwm/primal_dual/round_steps.hpp"

#include <algorithm>
#include <string>

#include "dynmwm/graph/contraction.hpp"

namespace dynmwm {

using Id = BlossomFamily::Id;

AugmentationReport augmentation_and_blossom_formation(const WeightedGraph& g, RelaxationState& s,
                                                      const TightSearchGraph& h, const StructuralOutput& out) {
  const int nh = h.vertex_count();
  const int n = g.vertex_count();
  if (static_cast<int>(out.part.size()) != nh || out.matching.vertex_count() != nh ||
      out.omega.vertex_count() != nh) {
    throw ContractViolation("structural output does not match the contracted graph");
  }
  AugmentationReport rep;

  // paths, phase by phase; each lifted with the matching it was found against
  for (const auto& phase : out.paths_by_phase) {
    for (const auto& hp : phase) {
      if (hp.size() < 2) throw ContractViolation("contracted augmenting path too short");
      std::vector<Id> roots;
      std::vector<Edge> witnesses;
      for (std::size_t i = 0; i < hp.size(); ++i) {
        roots.push_back(h.node(hp[i]));
        if (i + 1 < hp.size()) witnesses.push_back(h.witness(hp[i], hp[i + 1], s.m));
      }
      const auto path = lift_augmenting_path(roots, witnesses, s.omega, s.m);
      std::string why;
      if (!is_augmenting_path(s.m, path, &why, [&g](Vertex a, Vertex b) { return g.has_edge(a, b); })) {
        throw ContractViolation("lifted path is not augmenting in G: " + why);
      }
      augment_in_place(s.m, path);
      for (Id r : roots) {
        if (!s.omega.is_trivial(r)) s.omega.normalize(r, s.m);
      }
      ++rep.augmentations;
    }
  }
  if (!(contract_matching(h.contracted(), s.m) == out.matching)) {
    throw ContractViolation("M / Omega disagrees with the search matching after augmentation");
  }

  // new blossoms bottom-up; ascending id in the search family is creation order
  std::vector<Id> lifted(out.omega.id_limit(), BlossomFamily::kNone);
  for (Id b : out.omega.nontrivial()) {
    std::vector<Id> kids;
    for (Id c : out.omega.children(b)) {
      kids.push_back(out.omega.is_trivial(c) ? h.node(c) : lifted[c]);
    }
    std::vector<Edge> cycle;
    for (Edge e : out.omega.cycle(b)) cycle.push_back(h.witness(e.u, e.v, s.m));
    lifted[b] = s.omega.add(std::move(kids), std::move(cycle));
    s.set_z(lifted[b], 0);
    rep.new_blossoms.push_back(lifted[b]);
  }
  if (!respects(s.m, s.omega)) throw ContractViolation("new blossoms are not respected by M");

  rep.part.assign(n, Part::kUnfound);
  for (Vertex v = 0; v < n; ++v) rep.part[v] = out.part[h.index_of(v)];

  const std::size_t before = s.e_del.size();
  for (Edge e : out.e_del) {
    for (Vertex u : h.members(e.u)) {
      for (Vertex v : h.members(e.v)) {
        if (g.has_edge(u, v)) s.e_del.insert(make_edge(u, v));
      }
    }
  }
  rep.e_del_added = s.e_del.size() - before;

  for (Vertex f : out.f_del) {
    Vertex free_vertex = kNoVertex;
    for (Vertex u : h.members(f)) {
      if (s.m.is_free(u)) free_vertex = u;
    }
    if (free_vertex == kNoVertex) throw ContractViolation("deleted free blossom has no free vertex");
    if (s.f_del.insert(free_vertex).second) ++rep.f_del_added;
  }
  return rep;
}

void dual_adjustment(RelaxationState& s, std::span<const Part> part) {
  const int n = s.vertex_count();
  if (static_cast<int>(part.size()) != n) throw ContractViolation("partition sized for another graph");
  const Weight d = s.unit();
  for (Vertex u = 0; u < n; ++u) {
    if (part[u] == Part::kOut) s.y[u] -= d;
    if (part[u] == Part::kIn) s.y[u] += d;
    if (s.y[u] < 0) throw ContractViolation("dual adjustment drove y negative at vertex " + std::to_string(u));
  }
  for (Id b : s.omega.nontrivial_roots()) {
    const auto mem = s.omega.members(b);
    const Part p = part[mem.front()];
    for (Vertex u : mem) {
      if (part[u] != p) throw ContractViolation("root blossom split across the partition");
    }
    if (p == Part::kOut) s.set_z(b, s.z_of(b) + 2 * d);
    if (p == Part::kIn) s.set_z(b, s.z_of(b) - 2 * d);
    if (s.z_of(b) < 0) throw ContractViolation("dual adjustment drove z negative at blossom " + std::to_string(b));
  }
}

DissolutionReport blossom_dissolution(const WeightedGraph& g, RelaxationState& s) {
  DissolutionReport rep;
  const int limit = static_cast<int>(s.K * s.K);  // ceil(eps^-2), exact for eps = 1/K
  bool changed = true;
  while (changed) {
    changed = false;
    for (Id b : s.omega.nontrivial_roots()) {
      if (s.z_of(b) == 0) {
        s.omega.dissolve(b);
        ++rep.dissolved;
        changed = true;
        break;
      }
      if (s.omega.size(b) >= limit) {
        const Weight half = s.z_of(b) / 2;
        for (Vertex u : s.omega.members(b)) s.y[u] += half;
        s.set_z(b, 0);
        ++rep.large;
        const Vertex base = s.omega.base(b);
        if (s.m.is_free(base)) {
          if (s.f_del.insert(base).second) ++rep.f_del_added;
        } else {
          const Vertex other = s.m.mate(base);
          const Weight w = *g.weight(base, other);
          if (s.s(base, other) >= s.scaled(w) + 2 * s.unit() && s.m_del.insert(make_edge(base, other)).second) {
            ++rep.m_del_added;
          }
        }
        changed = true;
        break;
      }
    }
  }
  return rep;
}

}  // namespace dynmwm
