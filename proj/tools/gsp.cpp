// Copyright 2026 The gsp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "gsp/gsp.hpp"
#include "gsp/io.hpp"

namespace fs = std::filesystem;
using namespace gsp;
using Kind = VariationOperatorKind;

namespace {

constexpr int kUsageError = 1;
constexpr int kAssertionFailure = 2;

// Raised for logical failures (a check that ran and did not hold).
struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fs::path out_dir() {
  const char* env = std::getenv("GSP_OUT_DIR");
  return env != nullptr && *env != '\0' ? fs::path(env) : fs::path("out");
}

Kind operator_kind(const std::string& name) {
  if (name == "combinatorial") return Kind::Combinatorial;
  if (name == "normalized") return Kind::SymmetricNormalized;
  throw Error(ErrorCode::InvalidSpec, "operator must be combinatorial or normalized");
}

template <typename Reader>
auto read_path(const std::string& path, Reader&& reader) {
  std::istringstream is(io::read_file(path));
  return reader(is);
}

Graph load_graph(const std::string& path) {
  return read_path(path, [](std::istream& is) { return io::read_edge_list(is); });
}

// Writes to `path`, or stdout when it is empty or "-".
template <typename Writer>
void emit(const std::string& path, Writer&& writer) {
  std::ostringstream os;
  writer(os);
  if (path.empty() || path == "-") {
    std::cout << os.str();
  } else {
    if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
    io::write_file(path, os.str());
  }
}

std::vector<NodeIndex> parse_sizes(const std::string& text) {
  std::vector<NodeIndex> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) out.push_back(std::stol(item));
  return out;
}

// ---------------------------------------------------------------------------

struct GraphGenArgs {
  std::string kind = "sensor";
  NodeIndex n = 64;
  int k_neighbors = 6;
  std::string sizes = "8,8,16,32,64,128";
  double p_in = 0.8;
  double p_out = 0.01;
  std::uint64_t seed = 1;
  std::string output;
};

void add_graph(CLI::App& app) {
  auto* graph = app.add_subcommand("graph", "graph utilities")->require_subcommand(1);
  auto args = std::make_shared<GraphGenArgs>();
  auto* gen = graph->add_subcommand("gen", "generate a graph as an edge list");
  gen->add_option("--kind", args->kind, "sensor, community, path, cycle or complete")
      ->check(CLI::IsMember({"sensor", "community", "path", "cycle", "complete"}));
  gen->add_option("-n,--nodes", args->n, "node count (not used by community)");
  gen->add_option("--k-neighbors", args->k_neighbors);
  gen->add_option("--sizes", args->sizes, "community cluster sizes, comma separated");
  gen->add_option("--p-in", args->p_in);
  gen->add_option("--p-out", args->p_out);
  gen->add_option("--seed", args->seed);
  gen->add_option("-o,--output", args->output);
  gen->callback([args] {
    GeneratorSpec spec{PathGraph{args->n}, args->seed};
    if (args->kind == "sensor") spec.kind = RandomSensor{args->n, args->k_neighbors};
    if (args->kind == "community") spec.kind = Community{parse_sizes(args->sizes), args->p_in, args->p_out};
    if (args->kind == "cycle") spec.kind = CycleGraph{args->n};
    if (args->kind == "complete") spec.kind = CompleteGraph{args->n};
    const Graph g = gen_graph(spec);
    emit(args->output, [&](std::ostream& os) { io::write_edge_list(os, g); });
  });
}

struct SamplingArgs {
  std::string graph;
  std::string nodes;
  std::string kernel;
  Eigen::Index ratio = 0;
  bool partial = false;
  std::string op = "combinatorial";
};

void add_sampling_options(CLI::App* cmd, SamplingArgs& a) {
  cmd->add_option("-g,--graph", a.graph, "edge list CSV")->required();
  auto* nodes = cmd->add_option("--nodes", a.nodes, "vertex sampling set CSV");
  auto* kernel = cmd->add_option("--kernel", a.kernel, "frequency sampling kernel, e.g. exp_decay:2");
  cmd->add_option("--ratio", a.ratio, "frequency sampling fold M");
  cmd->add_flag("--partial", a.partial, "allow M not dividing N");
  cmd->add_option("--operator", a.op)->check(CLI::IsMember({"combinatorial", "normalized"}));
  nodes->excludes(kernel);
}

SamplingMatrixView<double> sampling_view(const SamplingArgs& a, const Graph& g,
                                         const SpectralDecomposition<double>& dec) {
  if (!a.nodes.empty()) {
    const auto set = read_path(a.nodes, [](std::istream& is) { return io::read_node_set(is); });
    return vertex_sampling_view(g, dec, VertexSampler<double>{set, {}});
  }
  require(!a.kernel.empty() && a.ratio > 0, ErrorCode::InvalidSpec,
          "give --nodes, or --kernel with --ratio");
  return frequency_sampling_view(
      dec, FrequencySampler{parse_kernel(a.kernel, dec.eigenvalues), a.ratio,
                            a.partial ? FoldPolicy::AllowPartial : FoldPolicy::RequireDivisible});
}

void add_sample(CLI::App& app) {
  auto a = std::make_shared<SamplingArgs>();
  auto signal = std::make_shared<std::string>();
  auto output = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand("sample", "sample a graph signal in the vertex or frequency domain");
  add_sampling_options(cmd, *a);
  cmd->add_option("-x,--signal", *signal, "signal CSV")->required();
  cmd->add_option("-o,--output", *output);
  cmd->callback([=] {
    const Graph g = load_graph(a->graph);
    const auto dec = eigendecompose<double>(g, operator_kind(a->op));
    const Eigen::VectorXd x = read_path(*signal, [](std::istream& is) { return io::read_signal(is); });
    const Eigen::VectorXd c = sampling_view(*a, g, dec).apply(x);
    emit(*output, [&](std::ostream& os) { io::write_samples(os, c); });
  });
}

struct SelectArgs {
  std::string graph;
  std::string method = "eopt";
  Eigen::Index k = 1;
  Eigen::Index m = 1;
  double gamma = 1.0;
  std::string kernel;
  std::uint64_t seed = 1;
  std::string op = "combinatorial";
  std::string output;
  bool json = false;
};

void add_select(CLI::App& app) {
  auto a = std::make_shared<SelectArgs>();
  auto* cmd = app.add_subcommand("select", "choose a vertex sampling set");
  cmd->add_option("-g,--graph", a->graph, "edge list CSV")->required();
  cmd->add_option("--method", a->method)
      ->check(CLI::IsMember({"eopt", "aopt", "regularized", "localized", "coherence", "uniform"}));
  cmd->add_option("-k,--bandwidth", a->k, "bandwidth K");
  cmd->add_option("-m,--budget", a->m, "number of nodes M")->required();
  cmd->add_option("--gamma", a->gamma, "regularization weight for the regularized method");
  cmd->add_option("--kernel", a->kernel, "kernel for the localized method (default ideal_lowpass:K)");
  cmd->add_option("--seed", a->seed, "seed for random methods");
  cmd->add_option("--operator", a->op)->check(CLI::IsMember({"combinatorial", "normalized"}));
  cmd->add_option("-o,--output", a->output);
  cmd->add_flag("--json", a->json, "print the selection with per-step scores as JSON");
  cmd->callback([a] {
    const Graph g = load_graph(a->graph);
    const Kind kind = operator_kind(a->op);
    SelectionResult r;
    if (a->method == "regularized") {
      r = greedy_select_regularized(sparse_laplacian<double>(g, kind), a->gamma, a->m);
    } else {
      const auto dec = eigendecompose<double>(g, kind);
      if (a->method == "eopt") r = greedy_select(dec, a->k, a->m, Criterion::EOpt);
      if (a->method == "aopt") r = greedy_select(dec, a->k, a->m, Criterion::AOpt);
      if (a->method == "localized") {
        const std::string spec = a->kernel.empty() ? "ideal_lowpass:" + std::to_string(a->k) : a->kernel;
        r = greedy_select_localized(dec, parse_kernel(spec, dec.eigenvalues), a->m);
      }
      if (a->method == "coherence") r = random_select(coherence_distribution(dec, a->k), a->m, a->seed);
      if (a->method == "uniform") r = random_select(uniform_distribution(dec.size()), a->m, a->seed);
    }
    if (a->json)
      emit(a->output, [&](std::ostream& os) { os << io::to_json(r).dump(2) << '\n'; });
    else
      emit(a->output, [&](std::ostream& os) { io::write_node_set(os, r.ordered_nodes); });
  });
}

void add_recover(CLI::App& app) {
  auto a = std::make_shared<SamplingArgs>();
  auto samples = std::make_shared<std::string>();
  auto bandwidth = std::make_shared<Eigen::Index>(0);
  auto shapes = std::make_shared<std::vector<std::string>>();
  auto partition = std::make_shared<std::string>();
  auto output = std::make_shared<std::string>();
  auto report_path = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand("recover", "reconstruct a signal from its samples");
  add_sampling_options(cmd, *a);
  cmd->add_option("-c,--samples", *samples, "samples CSV")->required();
  auto* bl = cmd->add_option("-k,--bandwidth", *bandwidth, "bandlimited model with K frequencies");
  auto* sh = cmd->add_option("--shape", *shapes, "spectral shape kernel; repeat for each generator column");
  auto* pc = cmd->add_option("--partition", *partition, "piecewise-constant model from a node,cell CSV");
  bl->excludes(sh)->excludes(pc);
  sh->excludes(pc);
  cmd->add_option("-o,--output", *output, "reconstruction CSV");
  cmd->add_option("--report", *report_path, "recovery report JSON (stderr if absent)");
  cmd->callback([=] {
    const Graph g = load_graph(a->graph);
    const auto dec = eigendecompose<double>(g, operator_kind(a->op));
    SubspaceModel model;
    if (*bandwidth > 0) {
      model = Bandlimited{*bandwidth};
    } else if (!shapes->empty()) {
      SpectralShapes s;
      for (const auto& k : *shapes) s.kernels.push_back(parse_kernel(k, dec.eigenvalues));
      model = s;
    } else {
      require(!partition->empty(), ErrorCode::InvalidSpec, "give --bandwidth, --shape or --partition");
      model = read_path(*partition, [](std::istream& is) { return io::read_partition(is); });
    }
    const Eigen::VectorXd c = read_path(*samples, [](std::istream& is) { return io::read_samples(is); });
    const auto report = recover(build_generator(dec, model), sampling_view(*a, g, dec), c);
    emit(*output, [&](std::ostream& os) { io::write_signal(os, report.reconstruction); });
    const std::string json = io::to_json(report).dump(2) + "\n";
    if (report_path->empty())
      std::cerr << json;
    else
      io::write_file(*report_path, json);
  });
}

struct McArgs {
  std::string rows;
  std::string cols;
  double alpha = 0.1;
  double beta = 0.1;
  std::string output;
};

void add_mc(CLI::App& app) {
  auto* mc = app.add_subcommand("mc", "graph-regularized matrix completion")->require_subcommand(1);

  auto a = std::make_shared<McArgs>();
  auto observed = std::make_shared<std::string>();
  auto tol = std::make_shared<double>(1e-10);
  auto max_iter = std::make_shared<int>(0);
  auto* solve = mc->add_subcommand("solve", "complete a matrix from observed triples");
  solve->add_option("--row-graph", a->rows)->required();
  solve->add_option("--col-graph", a->cols)->required();
  solve->add_option("--observed", *observed, "row,col,value triples of observed entries")->required();
  solve->add_option("--alpha", a->alpha);
  solve->add_option("--beta", a->beta);
  solve->add_option("--tol", *tol);
  solve->add_option("--max-iter", *max_iter);
  solve->add_option("-o,--output", a->output);
  solve->callback([=] {
    const Graph gr = load_graph(a->rows);
    const Graph gc = load_graph(a->cols);
    const auto t = read_path(*observed, [](std::istream& is) { return io::read_triples(is); });
    require(t.rows == gr.node_count() && t.cols == gc.node_count(), ErrorCode::DimensionMismatch,
            "matrix size does not match the graphs");
    const auto prob = make_completion_problem<double>(io::triples_to_dense(t), mask_from_entries(t.rows, t.cols, t.entries),
                                                      gr, gc, a->alpha, a->beta);
    const auto r = dglr_solve(prob, *tol, *max_iter);
    emit(a->output, [&](std::ostream& os) { io::write_triples(os, io::dense_to_triples(r.x)); });
    std::cerr << "iterations " << r.iterations << ", relative residual " << r.relative_residual << '\n';
  });

  auto b = std::make_shared<McArgs>();
  auto method = std::make_shared<std::string>("greedy");
  auto budget = std::make_shared<Eigen::Index>(0);
  auto kr = std::make_shared<Eigen::Index>(0);
  auto kc = std::make_shared<Eigen::Index>(0);
  auto* sample = mc->add_subcommand("sample", "choose entries to observe");
  sample->add_option("--row-graph", b->rows)->required();
  sample->add_option("--col-graph", b->cols)->required();
  sample->add_option("--method", *method)->check(CLI::IsMember({"greedy", "blcross"}));
  sample->add_option("--budget", *budget, "entries for the greedy method");
  sample->add_option("--k-rows", *kr, "row bandwidth for blcross");
  sample->add_option("--k-cols", *kc, "column bandwidth for blcross");
  sample->add_option("--alpha", b->alpha);
  sample->add_option("--beta", b->beta);
  sample->add_option("-o,--output", b->output);
  sample->callback([=] {
    const Graph gr = load_graph(b->rows);
    const Graph gc = load_graph(b->cols);
    const EntrySelection s = *method == "greedy" ? active_sample_greedy<double>(gr, gc, b->alpha, b->beta, *budget)
                                                 : bl_cross_sample(gr, gc, *kr, *kc);
    emit(b->output, [&](std::ostream& os) {
      const bool scored = s.per_step_score.size() == s.entries.size();
      os << (scored ? "row,col,score\n" : "row,col\n");
      os.precision(17);
      for (std::size_t i = 0; i < s.entries.size(); ++i) {
        os << s.entries[i].first << ',' << s.entries[i].second;
        if (scored) os << ',' << s.per_step_score[i];
        os << '\n';
      }
    });
  });
}

void add_experiment(CLI::App& app) {
  auto name = std::make_shared<std::string>();
  auto seed = std::make_shared<std::uint64_t>(1);
  auto sets = std::make_shared<std::vector<std::string>>();
  auto config = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand("experiment", "run a named experiment, or `all`");
  cmd->add_option("id", *name, "Fig4Top, Fig4Bottom, CommunitySelection, MCDemo, DftFoldingSanity or all");
  auto* seed_opt = cmd->add_option("--seed", *seed);
  cmd->add_option("--set", *sets, "override key=value; repeatable");
  cmd->add_option("--config", *config, "JSON config file");
  cmd->callback([=] {
    std::vector<ExperimentConfig> configs;
    if (!config->empty()) {
      configs.push_back(config_from_json(nlohmann::json::parse(io::read_file(*config))));
      if (!name->empty() && parse_experiment_id(*name) != configs[0].id)
        throw CLI::ValidationError("experiment id differs from the config file");
    } else if (name->empty()) {
      throw CLI::RequiredError("experiment id");
    } else if (*name == "all") {
      require(sets->empty(), ErrorCode::InvalidSpec, "--set applies to a single experiment");
      for (auto id : all_experiments()) configs.push_back({id, 1, {}});
    } else {
      configs.push_back({parse_experiment_id(*name), 1, {}});
    }
    for (auto& cfg : configs) {
      if (seed_opt->count() > 0 || config->empty()) cfg.seed = *seed;
      for (const auto& s : *sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw CLI::ValidationError("--set expects key=value, got " + s);
        cfg.overrides[s.substr(0, eq)] = s.substr(eq + 1);
      }
      cfg.validate();
    }
    std::vector<std::future<ExperimentResult>> running;
    for (const auto& cfg : configs)
      running.push_back(std::async(std::launch::async, [cfg] { return run_experiment(cfg); }));
    bool all_passed = true;
    for (auto& f : running) {
      const ExperimentResult r = f.get();
      const fs::path where = write_result(r, out_dir());
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.report.at("experiment").get<std::string>() << " -> "
                << where.string() << '\n';
      all_passed = all_passed && r.passed;
    }
    if (!all_passed) throw AssertionFailure("experiment checks failed");
  });
}

void add_selftest(CLI::App& app) {
  app.add_subcommand("selftest", "run the acceptance criteria")->callback([] {
    if (!acceptance::report(acceptance::run_all(), std::cout)) throw AssertionFailure("acceptance criteria failed");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph signal sampling and recovery toolkit"};
  app.require_subcommand(1);
  add_graph(app);
  add_sample(app);
  add_select(app);
  add_recover(app);
  add_mc(app);
  add_experiment(app);
  add_selftest(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  } catch (const AssertionFailure& e) {
    std::cerr << "gsp: " << e.what() << '\n';
    return kAssertionFailure;
  } catch (const Error& e) {
    std::cerr << "gsp: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "gsp: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
