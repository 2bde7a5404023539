#include "dynmwm/oracle/auxiliary.hpp"

#include <algorithm>

namespace dynmwm {

AuxiliaryGraph::AuxiliaryGraph(std::vector<std::uint8_t> base_side, AuxMode mode)
    : n_(static_cast<int>(base_side.size())), mode_(mode), base_side_(std::move(base_side)), mark_(n_, 0) {
  std::vector<std::uint8_t> side(2 * n_);
  for (int u = 0; u < n_; ++u) {
    side[u] = base_side_[u];
    side[n_ + u] = base_side_[u] == 0 ? 1 : 0;
  }
  backend_ = std::make_unique<ExactMcmBackend>(std::move(side));
  if (mode_ == AuxMode::kDecremental) {
    for (Vertex u = 0; u < n_; ++u) backend_->insert({u, aux(u)});
  }
}

void AuxiliaryGraph::insert_base_edge(Edge e) {
  if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) throw ContractViolation("base edge endpoint out of range");
  backend_->insert(e);
  base_hash_ += edge_hash(e);
  ++base_edges_;
}

void AuxiliaryGraph::erase_base_edge(Edge e) {
  if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) throw ContractViolation("base edge endpoint out of range");
  backend_->erase(e);
  base_hash_ -= edge_hash(e);
  --base_edges_;
}

std::vector<Edge> AuxiliaryGraph::query(std::span<const Vertex> subset) {
  ++queries_;
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  for (Vertex u : subset) {
    if (u < 0 || u >= n_) throw ContractViolation("query vertex out of range");
    mark_[u] = epoch_;
  }
  const std::uint64_t before = backend_->state_hash();
  backend_->begin_log();
  std::vector<Edge> out;
  try {
    if (mode_ == AuxMode::kIncremental) {
      for (Vertex u = 0; u < n_; ++u) {
        if (mark_[u] != epoch_) {
          backend_->insert({u, aux(u)});
          ++pendant_edits_;
        }
      }
    } else {
      for (Vertex u = 0; u < n_; ++u) {
        if (mark_[u] == epoch_) {
          backend_->erase({u, aux(u)});
          ++pendant_edits_;
        }
      }
    }
    for (Edge e : backend_->matching()) {
      if (e.u < n_ && e.v < n_ && mark_[e.u] == epoch_ && mark_[e.v] == epoch_) {
        out.push_back(base_side_[e.u] == 0 ? e : reversed(e));
      }
    }
  } catch (...) {
    backend_->rollback();
    throw;
  }
  backend_->rollback();
  if (backend_->state_hash() != before) ++mismatches_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> DynamicMcmOracle::query(std::span<const Vertex> subset) {
  ++queries_;
  if (subset.empty()) return {};
  return aux_->query(subset);
}

}  // namespace dynmwm
