#pragma once

#include <set>
#include <vector>

#include "dynmwm/graph/blossom.hpp"
#include "dynmwm/graph/epsilon.hpp"
#include "dynmwm/graph/matching.hpp"
#include "dynmwm/graph/verdict.hpp"
#include "dynmwm/graph/weighted_graph.hpp"

namespace dynmwm {

// Primal-dual relaxation state. Every dual quantity is stored multiplied by K = 1/eps,
// so the grid step eps*W is the integer W and real weights w become K*w.
struct RelaxationState {
  RelaxationState(int n, Weight max_weight, Epsilon eps);

  Epsilon eps;
  Weight W;
  Weight K;
  Matching m;
  BlossomFamily omega;
  std::vector<Weight> y;  // per vertex
  std::vector<Weight> z;  // per blossom id
  std::set<Edge> e_del;   // materialized
  std::set<Edge> m_del;
  std::set<Vertex> f_del;
  int rounds_done = 0;

  int vertex_count() const { return static_cast<int>(y.size()); }
  Weight scaled(Weight w) const { return K * w; }
  Weight unit() const { return W; }  // eps*W
  Weight z_of(BlossomFamily::Id b) const { return b < static_cast<BlossomFamily::Id>(z.size()) ? z[b] : 0; }
  void set_z(BlossomFamily::Id b, Weight value);

  // s_{uv} = y_u + y_v + sum of z over blossoms containing both.
  Weight s(Vertex u, Vertex v) const;
};

RelaxationState init_state(const WeightedGraph& g, Epsilon eps);

// (lambda, theta, eta), with lambda*W and eta*W given in scaled units.
struct RelaxationParams {
  Weight lambda_w;
  double theta;  // negative: report only
  Weight eta_w;
};

// lambda = eps, eta = 1/2 - eps*t, theta unchecked.
RelaxationParams round_params(const RelaxationState& s, int t);

struct RelaxationReport {
  Verdict verdict;
  std::size_t mu_e_del = 0;
  std::size_t m_del = 0;
  std::size_t f_del = 0;
  double theta = 0;  // max of the three budgets over n
};

RelaxationReport check_relaxation(const WeightedGraph& g, const RelaxationState& s, const RelaxationParams& p);

}  // namespace dynmwm
