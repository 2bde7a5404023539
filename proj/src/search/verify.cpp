#include "dynmwm/search/verify.hpp"

#include <algorithm>
#include <set>

#include "dynmwm/graph/cardinality.hpp"

namespace dynmwm {

bool no_augmenting_path(int n, std::span<const Edge> edges, std::span<const Edge> e_del,
                        std::span<const Vertex> removed, const Matching& m) {
  std::set<Edge> del;
  for (Edge e : e_del) del.insert(make_edge(e.u, e.v));
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) gone[v] = 1;
  std::vector<Edge> keep;
  std::size_t matched = 0;
  for (Edge e : edges) {
    Edge k = make_edge(e.u, e.v);
    if (gone[k.u] || gone[k.v] || del.count(k)) continue;
    keep.push_back(k);
    if (m.contains(k.u, k.v)) ++matched;
  }
  return matching_number(n, keep) == matched;
}

Verdict verify_structural_output(const SearchGraph& g, const Matching& m0, const StructuralOutput& out,
                                 const PhaseParams& params, StructuralChecks checks) {
  Verdict v;
  const int n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  std::set<Edge> host(edges.begin(), edges.end());
  auto is_edge = [&](Vertex a, Vertex b) { return host.count(make_edge(a, b)) > 0; };
  if (static_cast<int>(out.part.size()) != n || out.matching.vertex_count() != n ||
      out.omega.vertex_count() != n) {
    v.fail("output sized for a different graph");
    return v;
  }
  const Matching& m = out.matching;
  const BlossomFamily& omega = out.omega;
  auto part = [&](Vertex x) { return out.part[x]; };

  // matching: valid on H and extends m0
  for (Edge e : m.edges()) {
    if (!is_edge(e.u, e.v)) v.fail("matched pair is not an edge of H");
  }
  for (Vertex x = 0; x < n; ++x) {
    if (!m0.is_free(x) && m.is_free(x)) v.fail("M* does not cover every vertex matched by M0");
  }

  // replay of the augmenting paths
  Matching replay = m0;
  for (const auto& phase : out.paths_by_phase) {
    std::vector<char> used(n, 0);
    for (const auto& path : phase) {
      std::string why;
      if (!is_augmenting_path(replay, path, &why, is_edge)) v.fail("phase path is not augmenting: " + why);
      for (Vertex x : path) {
        if (used[x]) v.fail("paths of one phase share a vertex");
        used[x] = 1;
      }
    }
    for (const auto& path : phase) {
      if (v.ok()) augment_in_place(replay, path);
    }
  }
  if (v.ok() && !(replay == m)) v.fail("replayed paths do not produce M*");

  // (1) blossoms inside V_out, well formed and respected
  for (auto b : omega.nontrivial()) {
    for (Vertex x : omega.members(b)) {
      if (part(x) != Part::kOut) v.fail("blossom of Omega_out leaves V_out");
    }
    for (Edge e : omega.cycle(b)) {
      if (!is_edge(e.u, e.v)) v.fail("blossom cycle edge missing from H");
    }
  }
  if (!respects(m, omega)) v.fail("M* does not respect Omega_out");

  // partition consistency
  for (Vertex x = 0; x < n; ++x) {
    if (part(x) == Part::kIn && (m.is_free(x) || part(m.mate(x)) != Part::kOut)) {
      v.fail("V_in vertex not matched into V_out");
    }
  }

  // (2) inter-blossom matched edges
  for (Edge e : m.edges()) {
    if (omega.root(e.u) == omega.root(e.v)) continue;
    const Part a = part(e.u), b = part(e.v);
    const bool ok = (a == Part::kUnfound && b == Part::kUnfound) || (a == Part::kIn && b == Part::kOut) ||
                    (a == Part::kOut && b == Part::kIn);
    if (!ok) v.fail("matched edge breaks the partition rule");
  }

  // E_del: materialized form agrees with the symbolic one
  std::set<Edge> del(out.residue.begin(), out.residue.end());
  {
    std::vector<char> hot(n, 0);
    for (Vertex x : out.e_del_vertices) hot[x] = 1;
    for (Edge e : edges) {
      if ((hot[e.u] || hot[e.v]) && !m.contains(e.u, e.v)) del.insert(e);
    }
    if (std::vector<Edge>(del.begin(), del.end()) != out.e_del) v.fail("materialized E_del disagrees");
    for (Edge e : out.residue) {
      if (!is_edge(e.u, e.v)) v.fail("residue edge missing from H");
    }
  }

  // (3) no surviving out-out or out-unfound edge between blossoms
  for (Edge e : edges) {
    if (del.count(e) || omega.root(e.u) == omega.root(e.v)) continue;
    const Part a = part(e.u), b = part(e.v);
    if (a == Part::kOut && (b == Part::kOut || b == Part::kUnfound)) v.fail("edge leaves V_out badly");
    if (b == Part::kOut && a == Part::kUnfound) v.fail("edge leaves V_out badly");
  }

  // (4) free vertices
  std::vector<char> fdel(n, 0);
  for (Vertex x : out.f_del) {
    fdel[x] = 1;
    if (!m.is_free(x)) v.fail("F_del vertex is matched");
    if (part(x) != Part::kUnfound) v.fail("F_del vertex outside V_unfound");
  }
  for (Vertex x = 0; x < n; ++x) {
    if (m.is_free(x) && !fdel[x] && part(x) != Part::kOut) v.fail("free vertex outside V_out and F_del");
  }

  // (5) few deleted free vertices
  const std::size_t m0_last = out.phases.empty() ? m0.size() : out.phases.back().m0_size;
  if (out.f_del.size() > params.h * m0_last + 1e-9) v.fail("|F_del| exceeds h |M0|");
  if (!out.phases.empty() && out.phases.back().active_structures > params.h * m0_last + 1e-9) {
    v.fail("too many active structures at the end of the last phase");
  }

  // (6) few deleted edges in matching terms
  {
    std::vector<Edge> all(del.begin(), del.end());
    const std::size_t mu_del = matching_number(n, all);
    const std::size_t mu_res = matching_number(n, out.residue);
    const std::size_t vi = out.level_sizes.empty() ? 0 : out.level_sizes[out.i_star];
    if (mu_del > mu_res + out.active_inner_vertices + out.removed_vertices + vi) {
      v.fail("mu(E_del) exceeds its budget");
    }
    if (vi * (params.ell_max + 1) > static_cast<std::size_t>(n)) v.fail("|V_i*| above n/(ell_max+1)");
  }

  if (checks.certificate && v.ok()) {
    if (!no_augmenting_path(n, edges, out.e_del, out.f_del, m)) {
      v.fail("H minus E_del minus F_del still has an augmenting path");
    }
  }
  return v;
}

}  // namespace dynmwm
