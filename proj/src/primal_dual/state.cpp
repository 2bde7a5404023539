#include "dynmwm/primal_dual/state.hpp"

#include <algorithm>
#include <string>

#include "dynmwm/graph/cardinality.hpp"

namespace dynmwm {

RelaxationState::RelaxationState(int n, Weight max_weight, Epsilon e)
    : eps(e), W(max_weight), K(e.inverse()), m(n), omega(n), y(n, 0), z(n, 0) {}

void RelaxationState::set_z(BlossomFamily::Id b, Weight value) {
  if (b >= static_cast<BlossomFamily::Id>(z.size())) z.resize(b + 1, 0);
  z[b] = value;
}

Weight RelaxationState::s(Vertex u, Vertex v) const {
  Weight total = y[u] + y[v];
  const auto au = omega.ancestors(u);
  const auto av = omega.ancestors(v);
  // laminar: the common ancestors are a common outermost suffix
  auto iu = au.rbegin();
  auto iv = av.rbegin();
  while (iu != au.rend() && iv != av.rend() && *iu == *iv) {
    total += z_of(*iu);
    ++iu;
    ++iv;
  }
  return total;
}

RelaxationState init_state(const WeightedGraph& g, Epsilon eps) {
  if (eps.inverse() < 4) throw ContractViolation("the framework needs eps <= 1/4");
  RelaxationState s(g.vertex_count(), g.max_weight(), eps);
  std::fill(s.y.begin(), s.y.end(), s.K * s.W / 2);
  return s;
}

RelaxationParams round_params(const RelaxationState& s, int t) {
  return {s.unit(), -1.0, s.K * s.W / 2 - t * s.unit()};
}

namespace {

constexpr std::size_t kMaxReported = 64;

void fail(Verdict& v, std::string what) {
  if (v.violations.size() < kMaxReported) v.fail(std::move(what));
}

std::string edge_str(Edge e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

}  // namespace

RelaxationReport check_relaxation(const WeightedGraph& g, const RelaxationState& s, const RelaxationParams& p) {
  RelaxationReport r;
  Verdict& v = r.verdict;
  const int n = s.vertex_count();
  if (g.vertex_count() != n) {
    v.fail("state sized for another graph");
    return r;
  }
  if (!is_valid_matching(g, s.m)) fail(v, "M is not a matching of G");
  if (!respects(s.m, s.omega)) fail(v, "M does not respect Omega");

  // non-negativity
  for (Vertex u = 0; u < n; ++u) {
    if (s.y[u] < 0 || s.y[u] % p.lambda_w != 0) fail(v, "y off grid at " + std::to_string(u));
  }
  for (BlossomFamily::Id b = 0; b < static_cast<BlossomFamily::Id>(s.z.size()); ++b) {
    const Weight zb = s.z[b];
    if (zb < 0 || zb % (2 * p.lambda_w) != 0) fail(v, "z off grid at blossom " + std::to_string(b));
    if (zb > 0 && (s.omega.is_trivial(b) || !s.omega.alive(b))) {
      fail(v, "positive z outside Omega at " + std::to_string(b));
    }
  }
  for (auto b : s.omega.nontrivial_roots()) {
    if (s.z_of(b) <= 0) fail(v, "non-trivial root blossom " + std::to_string(b) + " has z = 0");
  }

  // domination
  for (const auto& e : g.edges()) {
    if (s.e_del.count({e.u, e.v})) continue;
    if (s.s(e.u, e.v) < s.scaled(e.w)) fail(v, "edge " + edge_str({e.u, e.v}) + " not dominated");
  }

  // tightness
  std::set<Edge> tight;
  for (Edge e : s.m.edges()) tight.insert(make_edge(e.u, e.v));
  for (auto b : s.omega.nontrivial_roots()) {
    for (Edge e : s.omega.blossom_edges(b)) tight.insert(make_edge(e.u, e.v));
  }
  for (Edge e : s.m_del) tight.insert(e);
  for (Edge e : tight) {
    const auto w = g.weight(e.u, e.v);
    if (!w) {
      fail(v, "tightness edge " + edge_str(e) + " missing from G");
      continue;
    }
    const Weight bound = s.m_del.count(e) ? s.scaled(*w) + s.K * s.W : s.scaled(*w) + 2 * p.lambda_w;
    if (s.s(e.u, e.v) > bound) fail(v, "edge " + edge_str(e) + " not tight");
  }

  // free vertices
  for (Vertex u = 0; u < n; ++u) {
    if (!s.m.is_free(u)) continue;
    if (s.f_del.count(u)) {
      if (s.y[u] > s.K * s.W) fail(v, "deleted free vertex " + std::to_string(u) + " has y above W");
    } else if (s.y[u] != p.eta_w) {
      fail(v, "free vertex " + std::to_string(u) + " has y != eta W");
    }
  }
  for (Vertex u : s.f_del) {
    if (u < 0 || u >= n) fail(v, "F_del vertex out of range");
  }

  // budgets
  std::vector<Edge> del(s.e_del.begin(), s.e_del.end());
  r.mu_e_del = matching_number(n, del);
  r.m_del = s.m_del.size();
  r.f_del = s.f_del.size();
  const std::size_t worst = std::max({r.mu_e_del, r.m_del, r.f_del});
  r.theta = n == 0 ? 0.0 : static_cast<double>(worst) / n;
  if (p.theta >= 0 && r.theta > p.theta + 1e-12) fail(v, "budget above theta n");
  return r;
}

}  // namespace dynmwm
