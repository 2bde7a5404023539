// dynmwm: experiment driver. Exit status 0 = all invariants held, 1 = violation, 2 = bad input.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "dynmwm/dynamic/stream.hpp"
#include "dynmwm/graph/io.hpp"
#include "dynmwm/harness/exact.hpp"
#include "dynmwm/harness/experiment.hpp"
#include "dynmwm/harness/generators.hpp"
#include "dynmwm/kernels/bitops.hpp"
#include "dynmwm/search/plain_graph.hpp"
#include "dynmwm/search/verify.hpp"

namespace {

using namespace dynmwm;

struct Options {
  std::uint64_t seed = 1;
  int n = 12;
  double density = 0.3;
  Weight W = 4;
  std::string eps = "1/4";
  std::string mode;
  double alpha = 1.0;
  double beta_stop = 0.0;
  int k = 0;
  std::string stream;
  std::string graph;
  std::string matrix;
  std::string out;
  std::size_t length = 0;
  std::size_t queries = 16;
  int rebuild = 0;
  int trials = 50;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "RNG seed");
  app->add_option("--n", o.n, "vertex count (matrix side for omv)");
  app->add_option("--density", o.density, "edge or entry density")->check(CLI::Range(0.0, 1.0));
  app->add_option("--W", o.W, "maximum weight")->check(CLI::PositiveNumber);
  app->add_option("--eps", o.eps, "approximation parameter, 1/K with K even");
  app->add_option("--alpha", o.alpha, "base oracle quality in (0,1]");
  app->add_option("--beta-stop", o.beta_stop, "phase-search stop threshold");
  app->add_option("--k", o.k, "sampling repetitions (0 = default)");
  app->add_option("--out", o.out, "report path (default stdout)");
}

int finish(const ExperimentSummary& s) {
  if (s.ok) {
    spdlog::info("all invariants held");
    return 0;
  }
  for (const auto& v : s.violations) spdlog::error("{}", v);
  return 1;
}

ExperimentSummary run(const ExperimentConfig& cfg, const std::string& out) {
  if (out.empty()) return run_experiment(cfg, &std::cout);
  std::ofstream os(out);
  if (!os) throw ContractViolation("cannot open " + out);
  return run_experiment(cfg, &os);
}

ExperimentConfig base_config(const Options& o) {
  ExperimentConfig c;
  c.seed = o.seed;
  c.n = o.n;
  c.density = o.density;
  c.W = o.W;
  c.eps = Epsilon::parse(o.eps);
  c.alpha = o.alpha;
  c.beta_stop = o.beta_stop;
  c.k = o.k;
  c.stream_length = o.length;
  return c;
}

template <class F>
auto read_file(const std::string& path, F&& f) {
  std::ifstream is(path);
  if (!is) throw ContractViolation("cannot open " + path);
  return f(is);
}

// Random static instances through the search and exact oracles.
int verify(const Options& o) {
  std::size_t bad = 0;
  for (int t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = o.seed + t;
    const int n = std::min(o.n, kExactDpLimit);
    const WeightedGraph g = random_graph(seed, n, o.density, o.W);
    if (n <= kEnumerationLimit && exact_mwm(g).value != enumerate_mwm(g).value) {
      spdlog::error("seed {}: subset DP disagrees with enumeration", seed);
      ++bad;
    }
    PlainSearchGraph h(n, g.edge_pairs(), GroupQueryMode::kExact, seed);
    const auto params = PhaseParams::make(Epsilon::parse(o.eps).value());
    const Matching m0(n);
    const auto out = run_structural_search(h, m0, params);
    const Verdict v = verify_structural_output(h, m0, out, params);
    for (const auto& s : v.violations) spdlog::error("seed {}: {}", seed, s);
    bad += !v.ok();
    ExperimentConfig c = base_config(o);
    c.seed = seed;
    c.n = n;
    const auto s = run_experiment(c, nullptr);
    for (const auto& x : s.violations) spdlog::error("seed {}: {}", seed, x);
    bad += !s.ok;
  }
  spdlog::info("verify: {} trials, {} failing", o.trials, bad);
  return bad == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  auto logger = spdlog::stderr_color_mt("dynmwm");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::info);
  if (const char* lvl = std::getenv("DYNMWM_LOG")) spdlog::set_level(spdlog::level::from_str(lvl));
  spdlog::debug("kernels: {}", dynmwm::kernels::isa_name(dynmwm::kernels::active_isa()));

  CLI::App app{"dynamic approximate maximum weight matching experiments"};
  app.require_subcommand(1);
  Options o;

  auto* st = app.add_subcommand("static", "run the primal-dual framework on one graph");
  add_common(st, o);
  st->add_option("--graph", o.graph, "graph file (n m W header, then u v w lines)");

  auto* dy = app.add_subcommand("dynamic", "run the epoch driver on an update stream");
  add_common(dy, o);
  dy->add_option("--mode", o.mode, "fully | incremental | decremental")->default_val("fully");
  dy->add_option("--graph", o.graph, "initial graph file");
  dy->add_option("--stream", o.stream, "update stream file (+ u v w / - u v)");
  dy->add_option("--length", o.length, "generated stream length (0 = three epochs)");

  auto* om = app.add_subcommand("omv", "run approximate OMv through the matching reduction");
  add_common(om, o);
  om->add_option("--matrix", o.matrix, "matrix file");
  om->add_option("--stream", o.stream, "OMv stream file (D i j / U i j b / Q bits)");
  om->add_option("--length", o.length, "generated update count");
  om->add_option("--queries", o.queries, "generated query count");
  om->add_option("--rebuild", o.rebuild, "wrapper rebuild period (0 = n)");

  auto* ve = app.add_subcommand("verify", "seeded invariant sweep over random instances");
  add_common(ve, o);
  ve->add_option("--trials", o.trials, "number of instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (st->parsed()) {
      ExperimentConfig c = base_config(o);
      c.mode = ExperimentMode::kStatic;
      if (!o.graph.empty()) c.graph = read_file(o.graph, [](std::istream& is) { return read_graph(is); });
      return finish(run(c, o.out));
    }
    if (dy->parsed()) {
      ExperimentConfig c = base_config(o);
      c.mode = parse_experiment_mode(o.mode);
      if (c.mode == ExperimentMode::kStatic || c.mode == ExperimentMode::kOmv) {
        throw ContractViolation("dynamic mode must be fully, incremental or decremental");
      }
      if (!o.graph.empty()) c.graph = read_file(o.graph, [](std::istream& is) { return read_graph(is); });
      if (!o.stream.empty()) c.updates = read_file(o.stream, [](std::istream& is) { return read_update_stream(is); });
      return finish(run(c, o.out));
    }
    if (om->parsed()) {
      if (!om->count("--eps")) o.eps = "1/16";
      ExperimentConfig c = base_config(o);
      c.mode = ExperimentMode::kOmv;
      c.omv_queries = o.queries;
      c.omv_rebuild = o.rebuild;
      if (!o.matrix.empty()) c.matrix = read_file(o.matrix, [](std::istream& is) { return read_matrix(is); });
      if (!o.stream.empty()) c.omv_ops = read_file(o.stream, [](std::istream& is) { return read_omv_stream(is); });
      return finish(run(c, o.out));
    }
    return verify(o);
  } catch (const ContractViolation& e) {
    spdlog::error("{}", e.what());
    return 2;
  }
}
