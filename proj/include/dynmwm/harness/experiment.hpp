#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dynmwm/dynamic/driver.hpp"
#include "dynmwm/graph/epsilon.hpp"
#include "dynmwm/omv/stream.hpp"
#include "dynmwm/oracle/induced_oracle.hpp"

namespace dynmwm {

inline constexpr const char* kReportSchema = "dynmwm.report/1";

enum class ExperimentMode { kStatic, kFully, kIncremental, kDecremental, kOmv };

ExperimentMode parse_experiment_mode(const std::string& s);
std::string to_string(ExperimentMode m);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int n = 12;
  double density = 0.3;
  Weight W = 4;
  Epsilon eps = Epsilon::from_inverse(4);
  ExperimentMode mode = ExperimentMode::kStatic;
  double alpha = 1.0;      // base oracle keeps ceil(alpha * |answer|) edges
  double beta_stop = 0.0;  // phase-search stop threshold
  int k = 0;               // sampling repetitions, 0 = default
  std::size_t stream_length = 0;  // 0: 3 epochs for dynamic modes, 4n for OMv
  std::size_t omv_queries = 16;
  int omv_rebuild = 0;      // 0: n
  double gap_constant = 4.0;  // C in w(M) >= mu_w - C eps W n
  // Lazy-update check uses (c + 2) eps W n; unset measures c at each recompute.
  std::optional<double> lazy_c;
  bool structural_checks = true;
  int exact_limit = 64;  // exact comparisons only up to this n

  std::optional<WeightedGraph> graph;            // overrides the generator
  std::optional<std::vector<UpdateEvent>> updates;
  std::optional<BooleanMatrix> matrix;
  std::optional<std::vector<OmvOp>> omv_ops;
};

struct ExperimentSummary {
  bool ok = true;
  std::vector<std::string> violations;
  nlohmann::json summary;
};

// (alpha, 0) oracle: an exact answer cut down to ceil(alpha * size) edges.
class TruncatingOracle final : public InducedMatchingOracle {
 public:
  TruncatingOracle(const BipartiteGraph& host, double alpha) : inner_(host), alpha_(alpha) {}
  int host_vertex_count() const override { return inner_.host_vertex_count(); }
  double alpha() const override { return alpha_; }
  std::vector<Edge> query(std::span<const Vertex> subset) override;

 private:
  ExactBipartiteOracle inner_;
  double alpha_;
};

// Writes line-delimited JSON records and a final summary record to `report` if given.
ExperimentSummary run_experiment(const ExperimentConfig& cfg, std::ostream* report = nullptr);

}  // namespace dynmwm
