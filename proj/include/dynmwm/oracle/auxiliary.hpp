#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dynmwm/oracle/backend.hpp"
#include "dynmwm/oracle/induced_oracle.hpp"

namespace dynmwm {

enum class AuxMode { kIncremental, kDecremental };

// Base bipartite graph on vertices 0..N-1 plus one auxiliary vertex u' = N + u per
// base vertex, placed on the side opposite u. Incremental mode starts without any
// pendant {u, u'}; decremental mode starts with all of them.
class AuxiliaryGraph {
 public:
  AuxiliaryGraph(std::vector<std::uint8_t> base_side, AuxMode mode);

  int base_vertex_count() const { return n_; }
  AuxMode mode() const { return mode_; }
  Vertex aux(Vertex u) const { return n_ + u; }

  void insert_base_edge(Edge e);
  void erase_base_edge(Edge e);
  bool has_base_edge(Edge e) const { return backend_->has_edge(e); }

  // Moves to G'_S, reads the maintained matching restricted to S, rolls back.
  std::vector<Edge> query(std::span<const Vertex> subset);

  std::uint64_t state_hash() { return backend_->state_hash(); }
  std::uint64_t base_edge_hash() const { return base_hash_; }
  std::size_t base_edge_count() const { return base_edges_; }

  std::size_t queries() const { return queries_; }
  std::size_t rollback_mismatches() const { return mismatches_; }
  std::size_t pendant_edits() const { return pendant_edits_; }

  ExactMcmBackend& backend() { return *backend_; }

 private:
  int n_;
  AuxMode mode_;
  std::vector<std::uint8_t> base_side_;
  std::unique_ptr<ExactMcmBackend> backend_;
  std::uint64_t base_hash_ = 0;
  std::size_t base_edges_ = 0;
  std::size_t queries_ = 0;
  std::size_t mismatches_ = 0;
  std::size_t pendant_edits_ = 0;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
};

// Induced matching oracle realized through pendant edits on an auxiliary graph.
class DynamicMcmOracle final : public InducedMatchingOracle {
 public:
  explicit DynamicMcmOracle(AuxiliaryGraph& aux) : aux_(&aux) {}

  int host_vertex_count() const override { return aux_->base_vertex_count(); }
  std::vector<Edge> query(std::span<const Vertex> subset) override;

 private:
  AuxiliaryGraph* aux_;
};

}  // namespace dynmwm
