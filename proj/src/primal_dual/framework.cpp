#include "dynmwm/primal_dual/framework.hpp"

#include <nlohmann/json.hpp>
#include <random>

#include "dynmwm/primal_dual/certificate.hpp"
#include "dynmwm/search/phase_search.hpp"

namespace dynmwm {

void write_trace_line(std::ostream& os, const RoundRecord& r) {
  nlohmann::json j = {
      {"t", r.t},
      {"matching_size", r.matching_size},
      {"matching_weight", r.matching_weight},
      {"nontrivial_blossoms", r.nontrivial_blossoms},
      {"max_root_blossom", r.max_root_blossom},
      {"e_del_edges", r.e_del_edges},
      {"mu_e_del", r.mu_e_del},
      {"m_del", r.m_del},
      {"f_del", r.f_del},
      {"theta", r.theta},
      {"duality_gap", r.duality_gap},
      {"phases", r.phases},
      {"augmentations", r.augmentations},
      {"new_blossoms", r.new_blossoms},
      {"dissolved", r.dissolved},
      {"h_vertices", r.h_vertices},
      {"h_edges", r.h_edges},
      {"oracle_queries", r.oracle_queries},
  };
  os << j.dump() << '\n';
}

FrameworkResult run_framework(const WeightedGraph& g, Epsilon eps, const FrameworkConfig& cfg) {
  FrameworkResult res{init_state(g, eps), {}};
  RelaxationState& st = res.state;
  const EpsilonExtension layout(g.vertex_count(), g.max_weight(), eps);

  std::optional<BuiltExtension> built;
  std::unique_ptr<InducedMatchingOracle> owned;
  InducedMatchingOracle* oracle = cfg.oracle;
  if (!oracle) {
    built.emplace(build_epsilon_extension(g, eps));
    owned = cfg.oracle_factory ? cfg.oracle_factory(*built) : std::make_unique<ExactBipartiteOracle>(built->graph);
    oracle = owned.get();
  }
  if (oracle->host_vertex_count() != layout.vertex_count()) {
    throw ContractViolation("base oracle is not hosted on the eps-extension");
  }

  const PhaseParams params = cfg.phase ? *cfg.phase : PhaseParams::make(eps.value());
  std::mt19937_64 rng(cfg.seed);

  for (int t = 1; t <= eps.rounds(); ++t) {
    const std::size_t queries_before = oracle->query_count();
    TightSearchGraph h(g, st, layout, *oracle, cfg.query_mode, rng, cfg.repetitions);
    const Matching m0 = h.contracted_matching();
    const StructuralOutput out = run_structural_search(h, m0, params);
    if (cfg.on_search) cfg.on_search(st, out, h);
    const AugmentationReport aug = augmentation_and_blossom_formation(g, st, h, out);
    dual_adjustment(st, aug.part);
    const DissolutionReport dis = blossom_dissolution(g, st);
    st.rounds_done = t;

    RoundRecord r;
    r.t = t;
    r.matching_size = st.m.size();
    r.matching_weight = matching_weight(g, st.m);
    for (auto b : st.omega.nontrivial()) {
      ++r.nontrivial_blossoms;
      if (st.omega.is_root(b)) r.max_root_blossom = std::max<std::size_t>(r.max_root_blossom, st.omega.size(b));
    }
    r.e_del_edges = st.e_del.size();
    r.m_del = st.m_del.size();
    r.f_del = st.f_del.size();
    r.phases = out.phases.size();
    r.augmentations = aug.augmentations;
    r.new_blossoms = aug.new_blossoms.size();
    r.dissolved = dis.dissolved;
    r.h_vertices = h.vertex_count();
    r.h_edges = h.contracted().edges.size();
    r.oracle_queries = oracle->query_count() - queries_before;
    if (cfg.trace_duality) {
      const DualityBound d = duality_certificate(g, st);
      r.duality_gap = d.gap;
      r.mu_e_del = static_cast<std::size_t>(d.deleted / std::max<Weight>(1, st.W));
      const std::size_t worst = std::max({r.mu_e_del, r.m_del, r.f_del});
      r.theta = g.vertex_count() == 0 ? 0.0 : static_cast<double>(worst) / g.vertex_count();
    }
    res.trace.push_back(r);
    if (cfg.observer) cfg.observer(r, st);
  }
  return res;
}

}  // namespace dynmwm
