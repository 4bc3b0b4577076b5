// linkpred: rank, evaluate, generate, bench, verify.
// Exit codes: 0 success, 1 usage error, 2 data error, 3 verification failed.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkpred/baselines.hpp"
#include "linkpred/benchmark.hpp"
#include "linkpred/error.hpp"
#include "linkpred/experiment.hpp"
#include "linkpred/generators.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/verify.hpp"

namespace {

using namespace linkpred;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  unsigned threads = 1;
  std::string data_dir{default_data_dir()};
};

struct MethodFlags {
  std::string f = "inverse-square";
  std::string weights = "shapley";
  std::string cn_mode = "inclusive";
};

DistanceKind distance_kind(const std::string& name) {
  auto kind = parse_distance_kind(name);
  if (!kind) throw UsageError("unknown distance function '" + name + "'");
  return *kind;
}

WeightFamily weight_family(const std::string& name) {
  auto family = parse_weight_family(name);
  if (!family) throw UsageError("unknown weight family '" + name + "'");
  return *family;
}

MethodSpec method_spec(const std::string& method, double k, const MethodFlags& flags) {
  auto kind = parse_method_kind(method);
  if (!kind) throw UsageError("unknown method '" + method + "'");
  auto mode = parse_cn_mode(flags.cn_mode);
  if (!mode) throw UsageError("unknown cn mode '" + flags.cn_mode + "'");
  MethodSpec spec{*kind, k, distance_kind(flags.f), weight_family(flags.weights), *mode};
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

// Writes to the named file, or to stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw DataError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

LoadedGraph load_graph(const std::string& name, const Common& common, bool weighted, std::string& path) {
  path = resolve_dataset_path(name, common.data_dir);
  auto loaded = load_edge_list_file(path, {weighted});
  if (loaded.duplicate_edges > 0) {
    std::cerr << "warning: " << loaded.duplicate_edges << " duplicate edge line(s) ignored in " << path << '\n';
  }
  return loaded;
}

// ---------------------------------------------------------------- rank

struct RankArgs {
  std::string graph;
  std::string method = "shapley-closeness";
  double k = 1;
  MethodFlags flags;
  std::size_t top = 0;
  bool weighted = false;
  std::string out;
};

int cmd_rank(const RankArgs& a, const Common& common) {
  const MethodSpec spec = method_spec(a.method, a.k, a.flags);
  std::string path;
  const Graph graph = load_graph(a.graph, common, a.weighted, path).graph;

  TableCache tables(graph, common.threads);
  const auto scores = score_method(spec, graph, tables, common.threads);
  const auto candidates = nonadjacent_pairs(graph);
  auto ranking = rank_candidates(scores, candidates);

  // Within equal scores, order rows by label pair rather than node id.
  for (std::size_t g = 0; g < ranking.group_count(); ++g) {
    auto first = ranking.order.begin() + static_cast<std::ptrdiff_t>(ranking.group_begin[g]);
    auto last = ranking.order.begin() + static_cast<std::ptrdiff_t>(ranking.group_begin[g + 1]);
    std::sort(first, last, [&](const ScoredPair& x, const ScoredPair& y) {
      const auto& xu = graph.label(x.pair.u);
      const auto& yu = graph.label(y.pair.u);
      return xu != yu ? xu < yu : graph.label(x.pair.v) < graph.label(y.pair.v);
    });
  }
  const std::size_t shown = a.top == 0 ? ranking.order.size() : std::min(a.top, ranking.order.size());

  Output out(a.out);
  auto& os = out.stream();
  os << "# linkpred " << library_version() << " rank graph=" << path << " checksum=" << graph_checksum(graph)
     << " method=" << spec.label() << " k=" << spec.k << " f=" << to_string(spec.f)
     << " weights=" << to_string(spec.weights) << " cn-mode=" << to_string(spec.cn_mode) << " top=" << a.top
     << " threads=" << common.threads << '\n';
  os << "# candidates=" << ranking.order.size() << " shown=" << shown << '\n';
  for (std::size_t g = 0; g < ranking.group_count(); ++g) {
    const std::size_t begin = ranking.group_begin[g];
    const std::size_t end = ranking.group_begin[g + 1];
    if (begin < shown && end > shown) {
      os << "# tie: " << (end - begin) << " pairs share score " << format_score(ranking.order[begin].score)
         << " across the cutoff; " << (shown - begin)
         << " shown, each in the top list with probability " << format_score(
                static_cast<double>(shown - begin) / static_cast<double>(end - begin))
         << '\n';
    }
  }
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& r = ranking.order[i];
    os << graph.label(r.pair.u) << ',' << graph.label(r.pair.v) << ',' << format_score(r.score) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string graph;
  std::vector<std::string> methods{"shapley-closeness"};
  std::vector<double> ks{1, 2, 3};
  MethodFlags flags;
  double fraction = 0.30;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  bool weighted = false;
  bool trial_records = false;
  std::string out;
};

int cmd_evaluate(const EvaluateArgs& a, const Common& common) {
  ExperimentConfig config;
  config.dataset = a.graph;
  for (const auto& m : a.methods) {
    for (double k : a.ks) config.methods.push_back(method_spec(m, k, a.flags));
  }
  config.removal_fraction = a.fraction;
  config.trials = a.trials;
  config.master_seed = a.seed;
  config.threads = common.threads;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::string path;
  const Graph graph = load_graph(a.graph, common, a.weighted, path).graph;
  auto report = run_experiment(graph, config);
  report.dataset_path = path;

  std::ostringstream header;
  header << "# linkpred " << report.version << " evaluate graph=" << path << " checksum=" << report.dataset_checksum
         << " nodes=" << report.node_count << " edges=" << report.edge_count << '\n'
         << "# methods=" << join(a.methods) << " k-list=" << join_numbers(a.ks) << " f=" << a.flags.f
         << " weights=" << a.flags.weights << " cn-mode=" << a.flags.cn_mode << " fraction=" << a.fraction
         << " trials=" << a.trials << " seed=" << a.seed << " threads=" << common.threads << '\n';
  for (const auto& [k, v] : report.mean_ball) header << "# V_" << k << "=" << format_score(v) << '\n';

  if (a.out.empty()) {
    std::cout << header.str();
    write_report_csv(report, std::cout);
  } else {
    Output csv(a.out + ".csv");
    csv.stream() << header.str();
    write_report_csv(report, csv.stream());
    Output json(a.out + ".json");
    write_report_json(report, json.stream(), a.trial_records);
    std::cerr << "wrote " << a.out << ".csv and " << a.out << ".json\n";
  }
  return 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::size_t n = 0;
  std::size_t m0 = 3;
  std::size_t m = 2;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  if (!(1 <= a.m && a.m <= a.m0 && a.m0 <= a.n)) throw UsageError("need 1 <= m <= m0 <= n");
  const Graph graph = generate_pa(a.n, a.m0, a.m, RandomSeed{a.seed, 0});
  Output out(a.out);
  out.stream() << "# linkpred " << library_version() << " generate n=" << a.n << " m0=" << a.m0 << " m=" << a.m
               << " seed=" << a.seed << " edges=" << graph.edge_count() << '\n';
  write_edge_list(graph, out.stream());
  return 0;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<std::size_t> sizes{250, 500};
  std::size_t m0 = 3;
  std::size_t m = 2;
  std::vector<double> ks{1, 2, 3};
  std::vector<std::string> methods{"shapley-closeness"};
  std::size_t repeats = 10;
  double fraction = 0.30;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_bench(const BenchArgs& a, const Common& common) {
  BenchmarkConfig config;
  config.sizes = a.sizes;
  config.m0 = a.m0;
  config.m = a.m;
  config.ks = a.ks;
  config.methods.clear();
  for (const auto& name : a.methods) {
    auto kind = parse_method_kind(name);
    if (!kind) throw UsageError("unknown method '" + name + "'");
    config.methods.push_back(*kind);
  }
  config.repeats = a.repeats;
  config.removal_fraction = a.fraction;
  config.seed = a.seed;
  config.threads = common.threads;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rows = runtime_benchmark(config);
  Output out(a.out);
  out.stream() << "# linkpred " << library_version() << " bench sizes=" << join_numbers(a.sizes) << " m0=" << a.m0
               << " m=" << a.m << " k-list=" << join_numbers(a.ks) << " methods=" << join(a.methods)
               << " repeats=" << a.repeats << " fraction=" << a.fraction << " seed=" << a.seed
               << " threads=" << common.threads << '\n';
  write_benchmark_csv(rows, out.stream());
  return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t max_n = 6;
  std::vector<double> ks{1, 2, 3};
  bool inject_fault = false;
  std::size_t pa_graphs = 5;
};

int cmd_verify(const VerifyArgs& a, const Common& common, bool threads_given) {
  VerifyOptions options;
  options.max_n = a.max_n;
  options.ks = a.ks;
  options.inject_sign_flip = a.inject_fault;
  options.pa_graphs = a.pa_graphs;
  options.threads = threads_given ? common.threads : 8;
  try {
    options.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << "# linkpred " << library_version() << " verify max-n=" << a.max_n << " k-list=" << join_numbers(a.ks)
            << " threads=1 vs " << options.threads << " pa-graphs=" << a.pa_graphs
            << " inject-fault=" << (a.inject_fault ? "yes" : "no") << '\n';
  options.progress = [](const std::string& line) { std::cout << line << std::endl; };
  const auto report = run_verify(options);
  for (const auto& check : report.checks) {
    if (!check.passed) std::cout << "counterexample [" << check.name << "]: " << check.counterexample << '\n';
  }
  std::cout << (report.passed() ? "verify: PASS" : "verify: FAIL") << '\n';
  return report.passed() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Game-theoretic link prediction: interaction-index ranking, baselines and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  auto* threads_opt = app.add_option("--threads", common.threads, "Worker threads; 1 gives bit-stable output")
                          ->check(CLI::Range(1u, 1024u))
                          ->capture_default_str();
  app.add_option("--data-dir", common.data_dir, "Where bare dataset names are looked up as <name>.txt")
      ->capture_default_str();

  const std::string method_help = "shapley-closeness, semivalue-closeness, shapley-degree, cn, lrw, srw";
  auto add_method_flags = [](CLI::App* cmd, MethodFlags& flags) {
    cmd->add_option("--f", flags.f, "Distance function: inverse-square, inverse, inverse-exponential, indicator")
        ->capture_default_str();
    cmd->add_option("--weights", flags.weights, "Semivalue weights: shapley, banzhaf")->capture_default_str();
    cmd->add_option("--cn-mode", flags.cn_mode, "k-neighbour test for cn: inclusive (<= k), strict (< k)")
        ->capture_default_str();
  };

  RankArgs rank;
  auto* rank_cmd = app.add_subcommand("rank", "Score and rank the non-adjacent pairs of a graph");
  rank_cmd->add_option("--graph", rank.graph, "Edge-list path or bundled dataset name")->required();
  rank_cmd->add_option("--method", rank.method, method_help)->capture_default_str();
  rank_cmd->add_option("--k", rank.k, "Radius (walk steps for lrw/srw)")->capture_default_str();
  add_method_flags(rank_cmd, rank.flags);
  rank_cmd->add_option("--top", rank.top, "Rows to print; 0 prints every candidate")->capture_default_str();
  rank_cmd->add_flag("--weighted", rank.weighted, "Use the third column as edge length");
  rank_cmd->add_option("--out", rank.out, "Output file (default stdout)");

  EvaluateArgs eval;
  auto* eval_cmd = app.add_subcommand("evaluate", "Repeated edge-removal experiment with AUC and precision");
  eval_cmd->add_option("--graph", eval.graph, "Edge-list path or bundled dataset name")->required();
  eval_cmd->add_option("--methods", eval.methods, "Comma-separated methods: " + method_help)
      ->delimiter(',')
      ->capture_default_str();
  eval_cmd->add_option("--k-list", eval.ks, "Comma-separated k values")->delimiter(',')->capture_default_str();
  add_method_flags(eval_cmd, eval.flags);
  eval_cmd->add_option("--fraction", eval.fraction, "Share of edges removed per trial, in (0, 1)")
      ->capture_default_str();
  eval_cmd->add_option("--trials", eval.trials, "Number of trials")->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed, "Master seed")->capture_default_str();
  eval_cmd->add_flag("--weighted", eval.weighted, "Use the third column as edge length");
  eval_cmd->add_flag("--trial-records", eval.trial_records, "Include per-trial values in the JSON report");
  eval_cmd->add_option("--out", eval.out, "Write <out>.csv and <out>.json instead of CSV on stdout");

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand("generate", "Preferential-attachment graph as an edge list");
  gen_cmd->add_option("--n", gen.n, "Node count")->required();
  gen_cmd->add_option("--m0", gen.m0, "Initial clique size")->capture_default_str();
  gen_cmd->add_option("--m", gen.m, "Edges per new node")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Kernel wall time on preferential-attachment graphs");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated node counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--m0", bench.m0, "Initial clique size")->capture_default_str();
  bench_cmd->add_option("--m", bench.m, "Edges per new node")->capture_default_str();
  bench_cmd->add_option("--k-list", bench.ks, "Comma-separated k values")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "Comma-separated methods: " + method_help)
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Fresh graphs per size")->capture_default_str();
  bench_cmd->add_option("--fraction", bench.fraction, "Edges removed before timing; 0 keeps the full graph")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Master seed")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the kernels against brute-force oracles");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest connected graph size swept (at most 9)")
      ->capture_default_str();
  verify_cmd->add_option("--k-list", verify.ks, "Comma-separated radii")->delimiter(',')->capture_default_str();
  verify_cmd->add_option("--pa-graphs", verify.pa_graphs, "PA graphs for the thread-invariance check")
      ->capture_default_str();
  verify_cmd->add_flag("--inject-fault", verify.inject_fault, "Negate kernel scores to exercise failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*rank_cmd) return cmd_rank(rank, common);
    if (*eval_cmd) return cmd_evaluate(eval, common);
    if (*gen_cmd) return cmd_generate(gen);
    if (*bench_cmd) return cmd_bench(bench, common);
    if (*verify_cmd) return cmd_verify(verify, common, threads_opt->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
