#pragma once

#include <span>
#include <vector>

#include "dynmwm/graph/bipartite.hpp"

namespace dynmwm {

// (alpha, beta)-approximate induced matching oracle on a bipartite host:
// query(S) returns a matching of host[S] with at least alpha*mu(host[S]) - beta*n_host edges.
// Edges come back as (side-0 vertex, side-1 vertex).
class InducedMatchingOracle {
 public:
  virtual ~InducedMatchingOracle() = default;
  virtual int host_vertex_count() const = 0;
  virtual double alpha() const { return 1.0; }
  virtual double beta() const { return 0.0; }
  virtual std::vector<Edge> query(std::span<const Vertex> subset) = 0;

  std::size_t query_count() const { return queries_; }

 protected:
  std::size_t queries_ = 0;
};

// Maximum matching of host[S] by layered augmenting paths; a (1, 0) oracle.
class ExactBipartiteOracle final : public InducedMatchingOracle {
 public:
  explicit ExactBipartiteOracle(const BipartiteGraph& host) : host_(&host) {}

  int host_vertex_count() const override { return host_->vertex_count(); }
  std::vector<Edge> query(std::span<const Vertex> subset) override;

 private:
  const BipartiteGraph* host_;
  HopcroftKarp hk_;
};

}  // namespace dynmwm
