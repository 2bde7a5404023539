#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dynmwm/oracle/auxiliary.hpp"
#include "dynmwm/oracle/epsilon_extension.hpp"
#include "dynmwm/primal_dual/framework.hpp"

namespace dynmwm {

enum class UpdateKind : std::uint8_t { kInsert, kDelete };

struct UpdateEvent {
  UpdateKind kind;
  Vertex u;
  Vertex v;
  Weight w = 0;  // inserts only
  std::size_t index = 0;
};

enum class DynamicMode { kFully, kIncremental, kDecremental };

// Epoch driver: recomputes through the framework every L = ceil(eps n) updates and
// in between exposes the epoch matching minus deleted edges. The auxiliary graph of
// G^eps is kept in lockstep with G and serves all framework queries.
class DynamicDriver {
 public:
  DynamicDriver(WeightedGraph initial, Epsilon eps, DynamicMode mode, FrameworkConfig cfg = {});
  DynamicDriver(const DynamicDriver&) = delete;
  DynamicDriver& operator=(const DynamicDriver&) = delete;

  const Matching& apply(const UpdateEvent& ev);
  void recompute();

  const Matching& matching() const { return exposed_; }
  const WeightedGraph& graph() const { return g_; }
  Epsilon eps() const { return eps_; }
  DynamicMode mode() const { return mode_; }
  int epoch_length() const { return epoch_length_; }
  std::size_t updates() const { return updates_; }
  std::size_t recomputes() const { return recomputes_; }
  const Matching& epoch_matching() const { return epoch_m_; }
  const std::optional<FrameworkResult>& last_result() const { return last_; }

  // Structural hash of the maintained extension equals that of G^eps built from scratch.
  bool extension_in_sync() const;
  AuxiliaryGraph& auxiliary() { return aux_; }
  const AuxiliaryGraph& auxiliary() const { return aux_; }

 private:
  void edit_extension(Vertex u, Vertex v, Weight w, bool insert);

  WeightedGraph g_;
  Epsilon eps_;
  DynamicMode mode_;
  FrameworkConfig cfg_;
  EpsilonExtension layout_;
  AuxiliaryGraph aux_;
  DynamicMcmOracle oracle_;
  int epoch_length_;
  std::size_t updates_ = 0;
  std::size_t recomputes_ = 0;
  Matching epoch_m_;
  Matching exposed_;
  std::optional<FrameworkResult> last_;
};

}  // namespace dynmwm
