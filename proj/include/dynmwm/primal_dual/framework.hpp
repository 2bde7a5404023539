#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>

#include "dynmwm/oracle/epsilon_extension.hpp"
#include "dynmwm/oracle/induced_oracle.hpp"
#include "dynmwm/primal_dual/round_steps.hpp"
#include "dynmwm/primal_dual/state.hpp"
#include "dynmwm/primal_dual/tight.hpp"
#include "dynmwm/search/params.hpp"

namespace dynmwm {

struct RoundRecord {
  int t = 0;
  std::size_t matching_size = 0;
  Weight matching_weight = 0;
  std::size_t nontrivial_blossoms = 0;
  std::size_t max_root_blossom = 1;
  std::size_t e_del_edges = 0;
  std::size_t mu_e_del = 0;
  std::size_t m_del = 0;
  std::size_t f_del = 0;
  double theta = 0;
  double duality_gap = 0;
  std::size_t phases = 0;
  std::size_t augmentations = 0;
  std::size_t new_blossoms = 0;
  std::size_t dissolved = 0;
  std::size_t h_vertices = 0;
  std::size_t h_edges = 0;
  std::size_t oracle_queries = 0;
};

void write_trace_line(std::ostream& os, const RoundRecord& r);

using OracleFactory = std::function<std::unique_ptr<InducedMatchingOracle>(const BuiltExtension&)>;

struct FrameworkConfig {
  ContractedQueryMode query_mode = ContractedQueryMode::kSampled;
  std::uint64_t seed = 1;
  int repetitions = 0;  // 0: ceil(4 gamma^2 ln n) + 1
  std::optional<PhaseParams> phase;
  // Base oracle on G^eps. A borrowed oracle wins over the factory; with neither an
  // exact oracle is built.
  InducedMatchingOracle* oracle = nullptr;
  OracleFactory oracle_factory;
  bool trace_duality = true;
  // Sees the state mid-round (after the search) and at every round boundary.
  std::function<void(const RelaxationState&, const StructuralOutput&, const TightSearchGraph&)> on_search;
  std::function<void(const RoundRecord&, const RelaxationState&)> observer;
};

struct FrameworkResult {
  RelaxationState state;
  std::vector<RoundRecord> trace;
};

FrameworkResult run_framework(const WeightedGraph& g, Epsilon eps, const FrameworkConfig& cfg = {});

}  // namespace dynmwm
