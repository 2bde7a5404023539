#include "dynmwm/dynamic/driver.hpp"

#include <cmath>

#include "dynmwm/dynamic/stream.hpp"
#include "dynmwm/oracle/backend.hpp"

namespace dynmwm {

namespace {

AuxMode aux_mode(DynamicMode m) { return m == DynamicMode::kDecremental ? AuxMode::kDecremental : AuxMode::kIncremental; }

}  // namespace

DynamicDriver::DynamicDriver(WeightedGraph initial, Epsilon eps, DynamicMode mode, FrameworkConfig cfg)
    : g_(std::move(initial)),
      eps_(eps),
      mode_(mode),
      cfg_(std::move(cfg)),
      layout_(g_.vertex_count(), g_.max_weight(), eps),
      aux_(layout_.sides(), aux_mode(mode)),
      oracle_(aux_),
      epoch_length_(std::max(1, static_cast<int>(std::ceil(eps.value() * g_.vertex_count() - 1e-9)))),
      epoch_m_(g_.vertex_count()),
      exposed_(g_.vertex_count()) {
  for (const auto& e : g_.edges()) edit_extension(e.u, e.v, e.w, true);
  cfg_.oracle = &oracle_;
  cfg_.oracle_factory = nullptr;
  recompute();
}

void DynamicDriver::edit_extension(Vertex u, Vertex v, Weight w, bool insert) {
  for (Edge e : layout_.edges_for(u, v, w)) {
    if (insert) {
      aux_.insert_base_edge(e);
    } else {
      aux_.erase_base_edge(e);
    }
  }
}

void DynamicDriver::recompute() {
  last_.emplace(run_framework(g_, eps_, cfg_));
  epoch_m_ = last_->state.m;
  exposed_ = epoch_m_;
  ++recomputes_;
}

const Matching& DynamicDriver::apply(const UpdateEvent& ev) {
  validate_update(g_, ev, mode_);
  if (ev.kind == UpdateKind::kInsert) {
    g_.insert_edge(ev.u, ev.v, ev.w);
    edit_extension(ev.u, ev.v, ev.w, true);
  } else {
    const Weight w = *g_.weight(ev.u, ev.v);
    g_.delete_edge(ev.u, ev.v);
    edit_extension(ev.u, ev.v, w, false);
    if (exposed_.contains(ev.u, ev.v)) exposed_.remove(ev.u, ev.v);
  }
  ++updates_;
  if (updates_ % epoch_length_ == 0) recompute();
  return exposed_;
}

bool DynamicDriver::extension_in_sync() const {
  const BuiltExtension fresh = build_epsilon_extension(g_, eps_);
  const auto edges = fresh.graph.edges();
  return aux_.base_edge_count() == edges.size() && aux_.base_edge_hash() == edge_set_hash(edges);
}

}  // namespace dynmwm
