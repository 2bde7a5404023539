#include "dynmwm/harness/experiment.hpp"

#include <cmath>
#include <ostream>

#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/omv/fully_dynamic.hpp"
#include "dynmwm/primal_dual/certificate.hpp"
#include "dynmwm/search/verify.hpp"

namespace dynmwm {

using nlohmann::json;

ExperimentMode parse_experiment_mode(const std::string& s) {
  if (s == "static") return ExperimentMode::kStatic;
  if (s == "fully" || s == "fully-dynamic") return ExperimentMode::kFully;
  if (s == "incremental") return ExperimentMode::kIncremental;
  if (s == "decremental") return ExperimentMode::kDecremental;
  if (s == "omv") return ExperimentMode::kOmv;
  throw ContractViolation("unknown mode '" + s + "'");
}

std::string to_string(ExperimentMode m) {
  switch (m) {
    case ExperimentMode::kStatic: return "static";
    case ExperimentMode::kFully: return "fully";
    case ExperimentMode::kIncremental: return "incremental";
    case ExperimentMode::kDecremental: return "decremental";
    case ExperimentMode::kOmv: return "omv";
  }
  return "?";
}

std::vector<Edge> TruncatingOracle::query(std::span<const Vertex> subset) {
  ++queries_;
  auto got = inner_.query(subset);
  const auto keep = static_cast<std::size_t>(std::ceil(alpha_ * got.size() - 1e-9));
  if (keep < got.size()) got.resize(keep);
  return got;
}

namespace {

class Reporter {
 public:
  Reporter(const ExperimentConfig& cfg, std::ostream* os) : cfg_(cfg), os_(os), n_(cfg.n), W_(cfg.W) {}

  void record(json j) {
    if (os_) *os_ << j.dump() << '\n';
  }
  void fail(const std::string& what) {
    sum_.ok = false;
    if (sum_.violations.size() < 64) sum_.violations.push_back(what);
  }
  void check(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
  void merge(const Verdict& v, const std::string& where) {
    for (const auto& s : v.violations) fail(where + ": " + s);
  }

  void describe(int n, Weight W) {
    n_ = n;
    W_ = W;
  }

  ExperimentSummary finish(json extra) {
    json witness = {{"seed", cfg_.seed}, {"n", n_}, {"density", cfg_.density}, {"W", W_},
                    {"eps", cfg_.eps.str()}, {"mode", to_string(cfg_.mode)}};
    sum_.summary = {{"type", "summary"}, {"schema", kReportSchema}, {"ok", sum_.ok},
                    {"violations", sum_.violations}, {"witness", witness}};
    sum_.summary.update(extra);
    record(sum_.summary);
    return std::move(sum_);
  }

 private:
  const ExperimentConfig& cfg_;
  std::ostream* os_;
  int n_;
  Weight W_;
  ExperimentSummary sum_;
};

FrameworkConfig framework_config(const ExperimentConfig& cfg, Reporter& rep, const WeightedGraph& g) {
  FrameworkConfig fc;
  fc.seed = cfg.seed;
  fc.repetitions = cfg.k;
  fc.phase = PhaseParams::make(cfg.eps.value(), -1.0, cfg.beta_stop);
  if (cfg.alpha < 1.0) {
    const double alpha = cfg.alpha;
    fc.oracle_factory = [alpha](const BuiltExtension& b) { return std::make_unique<TruncatingOracle>(b.graph, alpha); };
  }
  const PhaseParams params = *fc.phase;
  if (cfg.structural_checks) {
    fc.on_search = [&rep, params](const RelaxationState& s, const StructuralOutput& out, const TightSearchGraph& h) {
      StructuralChecks checks;
      rep.merge(verify_structural_output(h, h.contracted_matching(), out, params, checks),
                "search in round " + std::to_string(s.rounds_done + 1));
    };
  }
  fc.observer = [&rep, &g](const RoundRecord& r, const RelaxationState& s) {
    const std::string where = "round " + std::to_string(r.t);
    rep.merge(check_relaxation(g, s, round_params(s, r.t)).verdict, where + " relaxation");
    rep.merge(check_inter_blossom_duals(g, s), where + " inter-blossom duals");
    rep.merge(check_tight_contraction(g, s), where + " tight contraction");
  };
  return fc;
}

json round_json(const RoundRecord& r) {
  return {{"type", "round"}, {"t", r.t}, {"matching_size", r.matching_size}, {"matching_weight", r.matching_weight},
          {"nontrivial_blossoms", r.nontrivial_blossoms}, {"max_root_blossom", r.max_root_blossom},
          {"mu_e_del", r.mu_e_del}, {"m_del", r.m_del}, {"f_del", r.f_del}, {"theta", r.theta},
          {"duality_gap", r.duality_gap}, {"phases", r.phases}, {"augmentations", r.augmentations},
          {"oracle_queries", r.oracle_queries}};
}

// nullopt when n is past the limit or the memoized DP runs out of states
std::optional<ExactMatching> try_exact(const WeightedGraph& g, int limit) {
  if (g.vertex_count() > limit) return std::nullopt;
  try {
    return best_exact_mwm(g);
  } catch (const ContractViolation&) {
    return std::nullopt;
  }
}

double unit_of(const ExperimentConfig& cfg, const WeightedGraph& g) {
  return cfg.eps.value() * static_cast<double>(g.max_weight()) * g.vertex_count();
}

ExperimentSummary run_static(const ExperimentConfig& cfg, Reporter& rep) {
  const WeightedGraph g = cfg.graph ? *cfg.graph : random_graph(cfg.seed, cfg.n, cfg.density, cfg.W);
  rep.describe(g.vertex_count(), g.max_weight());
  FrameworkConfig fc = framework_config(cfg, rep, g);
  const auto res = run_framework(g, cfg.eps, fc);
  for (const auto& r : res.trace) rep.record(round_json(r));
  rep.check(is_valid_matching(g, res.state.m), "output is not a matching of G");

  json out = {{"type", "static"}, {"n", g.vertex_count()}, {"m", g.edge_count()},
              {"weight", matching_weight(g, res.state.m)}, {"size", res.state.m.size()}};
  if (const auto exact = try_exact(g, cfg.exact_limit)) {
    const ExactMatching& opt = *exact;
    const double gap = static_cast<double>(opt.value - matching_weight(g, res.state.m));
    const double unit = unit_of(cfg, g);
    const double c = unit > 0 ? gap / unit : 0.0;
    const DualityBound d = duality_certificate(g, res.state, &opt.matching);
    out.update({{"mu_w", opt.value}, {"gap", gap}, {"C", c}, {"bound", cfg.gap_constant * unit},
                {"dual_lower", d.lower}, {"dual_upper", d.upper}});
    rep.check(gap <= cfg.gap_constant * unit + 1e-9, "gap " + std::to_string(gap) + " exceeds C eps W n");
    rep.check(d.lower_holds && d.upper_holds, "duality certificate does not sandwich the optimum");
  }
  out["exact_compared"] = out.contains("mu_w");
  rep.record(out);
  return rep.finish(out);
}

ExperimentSummary run_dynamic(const ExperimentConfig& cfg, Reporter& rep) {
  const DynamicMode mode = cfg.mode == ExperimentMode::kFully         ? DynamicMode::kFully
                           : cfg.mode == ExperimentMode::kIncremental ? DynamicMode::kIncremental
                                                                      : DynamicMode::kDecremental;
  WeightedGraph g0 = cfg.graph ? *cfg.graph : random_graph(cfg.seed, cfg.n, cfg.density, cfg.W);
  rep.describe(g0.vertex_count(), g0.max_weight());
  // The driver owns its copy; the observers read it through the driver.
  std::unique_ptr<DynamicDriver> driver;
  const WeightedGraph* live = &g0;
  FrameworkConfig fc;
  {
    fc.seed = cfg.seed;
    fc.repetitions = cfg.k;
    fc.phase = PhaseParams::make(cfg.eps.value(), -1.0, cfg.beta_stop);
    const PhaseParams params = *fc.phase;
    if (cfg.structural_checks) {
      fc.on_search = [&rep, params](const RelaxationState& s, const StructuralOutput& out,
                                    const TightSearchGraph& h) {
        rep.merge(verify_structural_output(h, h.contracted_matching(), out, params),
                  "search in round " + std::to_string(s.rounds_done + 1));
      };
    }
    fc.observer = [&rep, &live](const RoundRecord& r, const RelaxationState& s) {
      const std::string where = "round " + std::to_string(r.t);
      rep.merge(check_relaxation(*live, s, round_params(s, r.t)).verdict, where + " relaxation");
      rep.merge(check_inter_blossom_duals(*live, s), where + " inter-blossom duals");
      rep.merge(check_tight_contraction(*live, s), where + " tight contraction");
    };
  }
  driver = std::make_unique<DynamicDriver>(g0, cfg.eps, mode, fc);
  live = &driver->graph();

  const std::size_t length =
      cfg.stream_length ? cfg.stream_length : static_cast<std::size_t>(3 * driver->epoch_length());
  const auto stream = cfg.updates ? *cfg.updates : random_update_stream(cfg.seed + 1, g0, length, mode);
  bool exact = true;
  const double unit = unit_of(cfg, g0);

  double c_epoch = 0;
  double max_c = 0;
  double max_lazy_ratio = 0;
  if (const auto opt = try_exact(driver->graph(), cfg.exact_limit)) {
    const double gap = static_cast<double>(opt->value - matching_weight(driver->graph(), driver->matching()));
    c_epoch = unit > 0 ? gap / unit : 0;
    max_c = c_epoch;
  } else {
    exact = false;
  }
  std::size_t step = 0;
  for (const auto& ev : stream) {
    const std::size_t before = driver->recomputes();
    driver->apply(ev);
    ++step;
    const WeightedGraph& g = driver->graph();
    json r = {{"type", "step"}, {"step", step}, {"size", driver->matching().size()},
              {"weight", matching_weight(g, driver->matching())}, {"recompute", driver->recomputes() != before}};
    rep.check(is_valid_matching(g, driver->matching()), "exposed matching invalid at step " + std::to_string(step));
    rep.check(driver->extension_in_sync(), "extension out of sync at step " + std::to_string(step));
    if (mode == DynamicMode::kIncremental) rep.check(ev.kind == UpdateKind::kInsert, "delete in incremental mode");
    if (mode == DynamicMode::kDecremental) rep.check(ev.kind == UpdateKind::kDelete, "insert in decremental mode");
    const auto opt = exact ? try_exact(g, cfg.exact_limit) : std::nullopt;
    exact = opt.has_value();
    if (exact) {
      const Weight mu = opt->value;
      const double gap = static_cast<double>(mu - matching_weight(g, driver->matching()));
      if (driver->recomputes() != before) {
        c_epoch = unit > 0 ? gap / unit : 0;
        max_c = std::max(max_c, c_epoch);
      }
      const double c = cfg.lazy_c ? *cfg.lazy_c : c_epoch;
      const double bound = (c + 2) * unit;
      max_lazy_ratio = std::max(max_lazy_ratio, unit > 0 ? gap / unit : 0);
      r.update({{"mu_w", mu}, {"gap", gap}, {"bound", bound}});
      rep.check(gap <= bound + 1e-9, "lazy bound broken at step " + std::to_string(step));
    }
    rep.record(r);
  }
  const auto& aux = driver->auxiliary();
  rep.check(aux.rollback_mismatches() == 0, "auxiliary rollback mismatched");
  return rep.finish({{"steps", step},
                     {"exact_compared", exact},
                     {"recomputes", driver->recomputes()},
                     {"epoch_length", driver->epoch_length()},
                     {"max_epoch_C", max_c},
                     {"max_gap_over_unit", max_lazy_ratio},
                     {"aux_queries", aux.queries()},
                     {"rollback_mismatches", aux.rollback_mismatches()}});
}

ExperimentSummary run_omv(const ExperimentConfig& cfg, Reporter& rep) {
  const int n = cfg.matrix ? cfg.matrix->size() : cfg.n;
  const BooleanMatrix m = cfg.matrix ? *cfg.matrix : random_matrix(cfg.seed, n, cfg.density);
  rep.describe(n, 1);
  const std::size_t updates = cfg.stream_length ? cfg.stream_length : 4 * static_cast<std::size_t>(n);
  const auto ops = cfg.omv_ops ? *cfg.omv_ops : random_omv_stream(cfg.seed + 1, n, updates, cfg.omv_queries);
  OmvConfig oc;
  oc.eps = cfg.eps.value();
  oc.seed = cfg.seed;
  FullyDynamicOmv omv(m, oc, cfg.omv_rebuild > 0 ? cfg.omv_rebuild : std::max(1, n));
  const double bound = 2 * std::sqrt(oc.eps) * n;

  std::size_t queries = 0;
  std::size_t max_d = 0;
  std::size_t max_crossing = 0;
  std::size_t loop_violations = 0;
  for (const auto& op : ops) {
    if (op.kind == OmvOpKind::kQuery) {
      const BitVector w = omv.query(op.v);
      const BitVector truth = omv.matrix().multiply(op.v);
      const std::size_t d = hamming(truth, w);
      const auto& st = omv.inner().last_stats();
      max_d = std::max(max_d, d);
      max_crossing = std::max(max_crossing, st.crossing_edges_at_exit);
      loop_violations += st.loop1_violations + st.loop2_violations;
      ++queries;
      rep.record({{"type", "query"}, {"index", queries}, {"distance", d}, {"bound", bound},
                  {"crossing_at_exit", st.crossing_edges_at_exit}, {"peel_rounds", st.peel_rounds},
                  {"undo_ok", st.undo_ok}});
      rep.check(d <= bound + 1e-9, "query " + std::to_string(queries) + " distance exceeds 2 sqrt(eps) n");
      rep.check(st.crossing_edges_at_exit <= bound + 1e-9, "too many crossing edges at loop exit");
      rep.check(st.undo_ok, "undo did not restore the backend");
    } else if (op.kind == OmvOpKind::kUpdate) {
      omv.update(op.i, op.j, op.b);
    } else {
      omv.update(op.i, op.j, false);
    }
    rep.check(omv.invariants_hold(), "wrapper bookkeeping broken");
  }
  return rep.finish({{"queries", queries},
                     {"max_distance", max_d},
                     {"bound", bound},
                     {"max_crossing_at_exit", max_crossing},
                     {"sampling_loop_misses", loop_violations},
                     {"rebuilds", omv.rebuilds()},
                     {"corrections", omv.corrections()}});
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& cfg, std::ostream* report) {
  if (cfg.alpha <= 0 || cfg.alpha > 1) throw ContractViolation("alpha must lie in (0, 1]");
  if (cfg.beta_stop < 0 || cfg.beta_stop >= 1) throw ContractViolation("beta-stop must lie in [0, 1)");
  if (cfg.n < 0) throw ContractViolation("n must be non-negative");
  if (cfg.mode != ExperimentMode::kOmv && cfg.eps.inverse() < 4) throw ContractViolation("eps must be at most 1/4");
  Reporter rep(cfg, report);
  ExperimentSummary s;
  switch (cfg.mode) {
    case ExperimentMode::kStatic: s = run_static(cfg, rep); break;
    case ExperimentMode::kOmv: s = run_omv(cfg, rep); break;
    default: s = run_dynamic(cfg, rep); break;
  }
  return s;
}

}  // namespace dynmwm
