// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <set>

#include "dynmwm/graph/cardinality.hpp"
#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/experiment.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/omv/decremental.hpp"
#include "dynmwm/oracle/group_sampling.hpp"
#include "dynmwm/primal_dual/certificate.hpp"
#include "dynmwm/primal_dual/framework.hpp"
#include "dynmwm/primal_dual/tight.hpp"
#include "dynmwm/search/plain_graph.hpp"
#include "dynmwm/search/verify.hpp"

using namespace dynmwm;

namespace {

// pinned tolerances
constexpr double kGapConstant = 4.0;       // C in w(M) >= mu_w - C eps W n
constexpr double kSamplingSuccess = 0.95;  // fraction of sampled queries reaching mu*/(2 gamma^2)
constexpr double kEps = 1e-9;

int failures = 0;

void report(int id, bool pass, const std::string& detail, double seconds) {
  std::printf("criterion %2d %s  %s  (%.2fs)\n", id, pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
  failures += !pass;
}

double timed(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Matching greedy(int n, const std::vector<Edge>& edges) {
  Matching m(n);
  for (Edge e : edges) {
    if (m.is_free(e.u) && m.is_free(e.v)) m.add(e.u, e.v);
  }
  return m;
}

// Runs of criterion 2, reused by 3 and 5.
struct RunSpec {
  std::uint64_t seed;
  int n;
  Weight W;
  int inverse;
};

std::vector<RunSpec> relaxation_runs() {
  const int ns[3] = {16, 24, 32};
  const Weight ws[3] = {1, 4, 8};
  const int invs[2] = {4, 8};
  std::vector<RunSpec> out;
  for (int i = 0; i < 50; ++i) out.push_back({static_cast<std::uint64_t>(9000 + i), ns[i % 3], ws[(i / 3) % 3], invs[(i / 9) % 2]});
  return out;
}

double measured_c = 0;

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  // 1. subset DP against enumeration
  {
    std::size_t agree = 0;
    const double t = timed([&] {
      for (int i = 0; i < 200; ++i) {
        const WeightedGraph g = random_graph(100 + i, 1 + i % 10, 0.2 + 0.1 * (i % 6), 1 + i % 9);
        agree += exact_mwm(g).value == enumerate_mwm(g).value;
      }
    });
    report(1, agree == 200 && t < 60, fmt("%.0f/200 graphs agree", agree), t);
  }

  // 2, 3, 5 share the runs
  {
    std::size_t rounds = 0, relax_bad = 0, obs_bad = 0, search_bad = 0;
    std::size_t gap_runs = 0, gap_bad = 0, sandwich_bad = 0;
    double max_theta = 0, max_c = 0;
    const double t = timed([&] {
      for (const auto& r : relaxation_runs()) {
        const WeightedGraph g = random_graph(r.seed, r.n, 0.25, r.W);
        const Epsilon eps = Epsilon::from_inverse(r.inverse);
        FrameworkConfig cfg;
        cfg.seed = r.seed;
        const PhaseParams params = PhaseParams::make(eps.value());
        cfg.on_search = [&](const RelaxationState&, const StructuralOutput& out, const TightSearchGraph& h) {
          search_bad += !verify_structural_output(h, h.contracted_matching(), out, params).ok();
        };
        cfg.observer = [&](const RoundRecord& rec, const RelaxationState& s) {
          ++rounds;
          const auto rep = check_relaxation(g, s, round_params(s, rec.t));
          relax_bad += !rep.verdict.ok();
          max_theta = std::max(max_theta, rep.theta);
          obs_bad += !check_inter_blossom_duals(g, s).ok() || !check_tight_contraction(g, s).ok();
        };
        const auto res = run_framework(g, eps, cfg);
        if (r.n <= kExactDpLimit) {
          ++gap_runs;
          const auto opt = exact_mwm(g);
          const double gap = static_cast<double>(opt.value - matching_weight(g, res.state.m));
          const double c = gap / (eps.value() * r.W * r.n);
          max_c = std::max(max_c, c);
          gap_bad += c > kGapConstant + kEps;
          const auto d = duality_certificate(g, res.state, &opt.matching);
          sandwich_bad += !(d.lower_holds && d.upper_holds && d.lower <= opt.value + kEps && opt.value <= d.upper + kEps);
        }
      }
    });
    measured_c = max_c;
    report(2, relax_bad == 0 && search_bad == 0 && rounds > 0,
           fmt("50 runs, %.0f round checks, %.0f relaxation violations, max theta %.3f, %.0f bad searches", rounds,
               relax_bad, max_theta, search_bad),
           t);
    report(3, gap_bad == 0 && sandwich_bad == 0 && gap_runs > 0,
           fmt("%.0f runs with n <= 20, max C = %.4f (limit 4), %.0f sandwich failures", gap_runs, max_c, sandwich_bad),
           0);
    report(5, obs_bad == 0, fmt("%.0f round boundaries, %.0f violations of either equivalence", rounds, obs_bad), 0);
  }

  // 4. structural search
  {
    std::size_t bad = 0, size_bad = 0, active_bad = 0;
    const double t = timed([&] {
      for (int i = 0; i < 100; ++i) {
        const int n = 8 + (i * 7) % 41;
        const WeightedGraph g = random_graph(4000 + i, n, 0.05 + 0.02 * (i % 8), 1);
        const auto edges = g.edge_pairs();
        const Matching m0 = i % 3 == 0 ? Matching(n) : greedy(n, edges);
        const PhaseParams params = PhaseParams::make(i % 2 ? 0.25 : 0.125);
        PlainSearchGraph h(n, edges, i % 4 == 3 ? GroupQueryMode::kSampled : GroupQueryMode::kExact, i);
        const auto out = run_structural_search(h, m0, params);
        bad += !verify_structural_output(h, m0, out, params).ok();
        for (const auto& ph : out.phases) {
          size_bad += ph.max_structure_size > static_cast<std::size_t>(params.limit_h) * params.ell_max;
        }
        if (!out.phases.empty()) {
          const auto& last = out.phases.back();
          active_bad += last.active_structures > params.h * last.m0_size + kEps;
        }
      }
    });
    report(4, bad == 0 && size_bad == 0 && active_bad == 0,
           fmt("100 runs, %.0f verifier failures, %.0f oversize structures, %.0f active-count failures", bad, size_bad,
               active_bad),
           t);
  }

  // 6. sampling on a crafted gamma = 3 instance: groups of three, one hidden edge per group pair
  {
    const int gamma = 3, groups = 8;
    const int n_host = 2 * gamma * groups;
    const int k = static_cast<int>(std::ceil(4.0 * gamma * gamma * std::log(static_cast<double>(n_host))));
    std::vector<std::vector<Vertex>> members(2 * groups);
    for (int gi = 0; gi < 2 * groups; ++gi) {
      for (int x = 0; x < gamma; ++x) members[gi].push_back(gi * gamma + x);
    }
    // hidden edge between member (i mod 3) of left group i and member ((i+1) mod 3) of right group i
    auto hidden = [&](Vertex a, Vertex b) {
      const int ga = a / gamma, gb = b / gamma;
      return gb == ga + groups && a % gamma == ga % gamma && b % gamma == (ga + 1) % gamma;
    };
    std::vector<int> left, right;
    for (int i = 0; i < groups; ++i) {
      left.push_back(i);
      right.push_back(groups + i);
    }
    const double mu_star = groups;
    std::size_t ok = 0;
    const double t = timed([&] {
      for (int trial = 0; trial < 200; ++trial) {
        std::mt19937_64 rng(trial);
        const auto base = [&](std::span<const Vertex> l, std::span<const Vertex> r) {
          std::vector<Edge> out;
          std::vector<char> used(n_host, 0);
          for (Vertex a : l) {
            for (Vertex b : r) {
              if (!used[a] && !used[b] && hidden(a, b)) {
                out.push_back({a, b});
                used[a] = used[b] = 1;
              }
            }
          }
          return out;
        };
        const auto got = sample_group_matching(
            base, [&](int gi) { return std::span<const Vertex>(members[gi]); }, left, right, k, rng);
        ok += got.size() >= mu_star / (2.0 * gamma * gamma) - kEps;
      }
    });
    report(6, ok >= kSamplingSuccess * 200, fmt("k = %.0f, %.0f/200 trials reach mu*/(2 gamma^2) = %.3f", k, ok, mu_star / 18), t);
  }

  // 7. lazy updates
  {
    std::size_t streams = 0, bad = 0;
    double worst = 0;
    const double t = timed([&] {
      for (int i = 0; i < 12; ++i) {
        ExperimentConfig c;
        c.mode = ExperimentMode::kFully;
        c.seed = 7000 + i;
        c.n = 24;
        c.W = std::vector<Weight>{1, 4, 8}[i % 3];
        c.density = 0.2 + 0.05 * (i % 4);
        c.eps = Epsilon::from_inverse(4);
        c.lazy_c = measured_c;
        c.structural_checks = false;
        const auto s = run_experiment(c);
        ++streams;
        bad += !s.ok;
        worst = std::max(worst, s.summary["max_gap_over_unit"].get<double>());
      }
    });
    report(7, bad == 0,
           fmt("%.0f streams of 3 epochs, worst gap / (eps W n) = %.4f against c + 2 = %.4f", streams, worst,
               measured_c + 2),
           t);
  }

  // 8. rollback exactness
  {
    std::size_t aux_queries = 0, aux_bad = 0, omv_queries = 0, omv_bad = 0;
    const double t = timed([&] {
      for (int i = 0; i < 10; ++i) {
        for (auto mode : {DynamicMode::kIncremental, DynamicMode::kDecremental}) {
          const WeightedGraph g = random_graph(8000 + i, 16, mode == DynamicMode::kIncremental ? 0.1 : 0.35, 4);
          DynamicDriver d(g, Epsilon::from_inverse(4), mode);
          for (const auto& ev : random_update_stream(8100 + i, g, 3 * d.epoch_length(), mode)) d.apply(ev);
          aux_queries += d.auxiliary().queries();
          aux_bad += d.auxiliary().rollback_mismatches();
        }
        OmvConfig oc;
        oc.seed = i;
        DecrementalOmv omv(random_matrix(8200 + i, 16, 0.3), oc);
        std::mt19937_64 rng(i);
        for (int q = 0; q < 16; ++q) {
          omv.query(random_bits(rng, 16, 0.5));
          ++omv_queries;
          omv_bad += !omv.last_stats().undo_ok;
        }
      }
    });
    report(8, aux_bad == 0 && omv_bad == 0 && aux_queries > 0,
           fmt("auxiliary: %.0f/%.0f queries restored; OMv: %.0f/%.0f queries restored", aux_queries - aux_bad,
               aux_queries, omv_queries - omv_bad, omv_queries),
           t);
  }

  // 9. OMv
  {
    std::size_t bad = 0, queries = 0, max_d = 0, max_cross = 0;
    const double t = timed([&] {
      for (int i = 0; i < 100; ++i) {
        ExperimentConfig c;
        c.mode = ExperimentMode::kOmv;
        c.seed = 10000 + i;
        c.n = 16;
        c.density = 0.1 + 0.05 * (i % 6);
        c.eps = Epsilon::from_inverse(16);
        c.stream_length = 64;
        c.omv_queries = 16;
        c.omv_rebuild = 16;
        const auto s = run_experiment(c);
        bad += !s.ok;
        queries += s.summary["queries"].get<std::size_t>();
        max_d = std::max(max_d, s.summary["max_distance"].get<std::size_t>());
        max_cross = std::max(max_cross, s.summary["max_crossing_at_exit"].get<std::size_t>());
      }
    });
    report(9, bad == 0 && queries == 1600,
           fmt("%.0f queries, max d(Mv, w) = %.0f, max crossing at exit = %.0f (limit 8), %.0f failing pairs", queries,
               max_d, max_cross, bad),
           t);
  }

  // 10. degenerate inputs
  {
    std::vector<std::pair<std::string, WeightedGraph>> cases;
    cases.emplace_back("empty", WeightedGraph(6, 4));
    {
      WeightedGraph g(2, 5);
      g.insert_edge(0, 1, 5);
      cases.emplace_back("single edge", g);
    }
    for (int n : {5, 6, 9}) {
      WeightedGraph g(n, 3);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) g.insert_edge(u, v, 3);
      }
      cases.emplace_back("K" + std::to_string(n) + " equal weights", g);
    }
    for (int leaves : {1, 4, 11}) {
      WeightedGraph g(leaves + 1, 6);
      for (Vertex v = 1; v <= leaves; ++v) g.insert_edge(0, v, 6);
      cases.emplace_back("star " + std::to_string(leaves), g);
    }
    {
      WeightedGraph g(8, 8);
      for (Vertex v = 1; v < 8; ++v) g.insert_edge(0, v, v + 1);
      cases.emplace_back("star varied", g);
    }
    // Gap 0 is owed when the initial tight subgraph has one weight w* and w* mu(tight) = mu_w,
    // so every maximum matching of it is optimal; the rest owe the additive bound and the sandwich.
    std::size_t exact_class = 0, exact_hit = 0, bound_class = 0, bound_hit = 0;
    std::string missed;
    const double t = timed([&] {
      for (const auto& [name, g] : cases) {
        for (int inv : {4, 8}) {
          const Epsilon eps = Epsilon::from_inverse(inv);
          const auto tight = tight_edges(g, init_state(g, eps));
          std::set<Weight> weights;
          for (Edge e : tight) weights.insert(*g.weight(e.u, e.v));
          const Weight mu_w = exact_mwm(g).value;
          const bool owes_exact =
              weights.size() <= 1 &&
              (weights.empty() ? 0 : *weights.begin()) * static_cast<Weight>(matching_number(g.vertex_count(), tight)) == mu_w;

          bool ok = true;
          FrameworkConfig cfg;
          cfg.observer = [&](const RoundRecord& r, const RelaxationState& s) {
            ok = ok && check_relaxation(g, s, round_params(s, r.t)).verdict.ok();
          };
          const auto res = run_framework(g, eps, cfg);
          ok = ok && is_valid_matching(g, res.state.m);
          const Weight w = matching_weight(g, res.state.m);
          bool hit;
          if (owes_exact) {
            ++exact_class;
            hit = ok && w == mu_w;
            exact_hit += hit;
          } else {
            ++bound_class;
            const auto opt = exact_mwm(g);
            const auto d = duality_certificate(g, res.state, &opt.matching);
            hit = ok && mu_w - w <= kGapConstant * eps.value() * g.max_weight() * g.vertex_count() + kEps &&
                  d.lower_holds && d.upper_holds;
            bound_hit += hit;
          }
          if (!hit) missed += " " + name + "@1/" + std::to_string(inv);
        }
      }
    });
    report(10, exact_hit == exact_class && bound_hit == bound_class,
           fmt("%.0f/%.0f tight-optimal runs exact, %.0f/%.0f other runs within bound", exact_hit, exact_class,
               bound_hit, bound_class) +
               (missed.empty() ? "" : "; missed:" + missed),
           t);
  }

  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("total %.1fs (target under 600s), %d failing\n", total, failures);
  return failures;
}
