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


#include "gsp/experiments.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "gsp/completion.hpp"
#include "gsp/error.hpp"
#include "gsp/generators.hpp"
#include "gsp/io.hpp"
#include "gsp/kernel.hpp"
#include "gsp/recovery.hpp"
#include "gsp/sampling.hpp"
#include "gsp/selection.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

namespace {

using nlohmann::json;
using Kind = VariationOperatorKind;

const std::map<ExperimentId, std::string>& id_names() {
  static const std::map<ExperimentId, std::string> names = {
      {ExperimentId::Fig4Top, "Fig4Top"},
      {ExperimentId::Fig4Bottom, "Fig4Bottom"},
      {ExperimentId::CommunitySelection, "CommunitySelection"},
      {ExperimentId::MCDemo, "MCDemo"},
      {ExperimentId::DftFoldingSanity, "DftFoldingSanity"}};
  return names;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

class Params {
 public:
  explicit Params(const ExperimentConfig& cfg) : values_(default_overrides(cfg.id)) {
    cfg.validate();
    for (const auto& [k, v] : cfg.overrides) values_[k] = v;
  }

  const std::string& str(const std::string& key) const { return values_.at(key); }

  long integer(const std::string& key) const {
    const std::string& s = str(key);
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require(pos == s.size() && !s.empty(), ErrorCode::InvalidSpec,
            "override " + key + " expects an integer, got '" + s + "'");
    return v;
  }

  long positive(const std::string& key) const {
    const long v = integer(key);
    require(v >= 1, ErrorCode::InvalidSpec, "override " + key + " must be positive");
    return v;
  }

  double real(const std::string& key) const {
    const std::string& s = str(key);
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    require(pos == s.size() && !s.empty() && std::isfinite(v), ErrorCode::InvalidSpec,
            "override " + key + " expects a number, got '" + s + "'");
    return v;
  }

  std::vector<long> integers(const std::string& key) const {
    std::vector<long> out;
    std::stringstream ss(str(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(item, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      require(pos == item.size() && !item.empty() && v >= 1, ErrorCode::InvalidSpec,
              "override " + key + " expects positive integers separated by commas");
      out.push_back(v);
    }
    require(!out.empty(), ErrorCode::InvalidSpec, "override " + key + " is empty");
    return out;
  }

  Kind operator_kind() const {
    const std::string& s = str("operator");
    if (s == "combinatorial") return Kind::Combinatorial;
    if (s == "normalized") return Kind::SymmetricNormalized;
    throw Error(ErrorCode::InvalidSpec, "operator must be combinatorial or normalized");
  }

  json to_json() const {
    json j = json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
  }

 private:
  std::map<std::string, std::string> values_;
};

double relative_error(const Eigen::VectorXd& estimate, const Eigen::VectorXd& truth) {
  return (estimate - truth).norm() / truth.norm();
}

double rmse(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return std::sqrt((a - b).squaredNorm() / static_cast<double>(a.size()));
}

std::string csv_signal(const Eigen::VectorXd& x) {
  std::ostringstream os;
  io::write_signal(os, x);
  return os.str();
}

std::string csv_nodes(const std::vector<NodeIndex>& nodes) {
  std::ostringstream os;
  io::write_node_set(os, nodes);
  return os.str();
}

std::ostringstream table_stream() {
  std::ostringstream os;
  os.precision(17);
  return os;
}

// ---------------------------------------------------------------------------

ExperimentResult fig4_top(const ExperimentConfig& cfg) {
  const Params p(cfg);
  const auto n = p.positive("n");
  const auto k = p.positive("k");
  const auto m = p.positive("m");
  require(k <= n && m <= n, ErrorCode::InvalidSpec, "k and m must not exceed n");

  const Graph g = gen_graph({RandomSensor{n, static_cast<int>(p.positive("k_neighbors"))}, cfg.seed});
  const auto dec = eigendecompose<double>(g, p.operator_kind());
  std::mt19937_64 rng(cfg.seed ^ 0x5157'0000'0000'0001ULL);
  const Eigen::MatrixXd a = build_generator(dec, SubspaceModel{Bandlimited{k}});
  const Eigen::VectorXd x = a * normal_vector(k, 0.0, 1.0, rng);

  const auto selection = greedy_select(dec, k, m, Criterion::EOpt);
  const auto view = vertex_sampling_view(g, dec, VertexSampler<double>{selection.ordered_nodes, {}});
  const Eigen::VectorXd c = view.apply(x);
  const auto report = recover(a, view, c);
  const double err = relative_error(report.reconstruction, x);

  ExperimentResult r;
  r.passed = report.ds_condition_held && err < 1e-8;
  r.report = {{"relative_error", err},
              {"ds_condition_held", report.ds_condition_held},
              {"smallest_singular_value", report.smallest_singular_value},
              {"sampling_set", selection.ordered_nodes},
              {"connected_components", component_count(g)}};
  r.csv_files["graph.csv"] = [&] {
    std::ostringstream os;
    io::write_edge_list(os, g);
    return os.str();
  }();
  r.csv_files["signal.csv"] = csv_signal(x);
  r.csv_files["reconstruction.csv"] = csv_signal(report.reconstruction);
  r.csv_files["sampling_set.csv"] = csv_nodes(selection.ordered_nodes);
  return r;
}

// ---------------------------------------------------------------------------

struct PgsRun {
  json report;
  bool passed = false;
  Eigen::VectorXd x, freq_generic, freq_corrected, vertex;
};

PgsRun pgs_run(const SpectralDecomposition<double>& dec, const Graph& g, Eigen::Index k,
               FoldPolicy policy, double tau, std::mt19937_64& rng) {
  const double lambda_max = dec.eigenvalues.maxCoeff();
  const PeriodicSpectrum model{linear_decay_kernel(lambda_max), k, policy};
  const SpectralKernel sampling_kernel = exp_decay_kernel(tau);
  const Eigen::MatrixXd a = build_generator(dec, SubspaceModel{model});

  PgsRun run;
  run.x = a * normal_vector(k, 1.0, 1.0, rng);

  const auto freq_view = frequency_sampling_view(dec, FrequencySampler{sampling_kernel, k, policy});
  const Eigen::VectorXd c_freq = freq_view.apply(run.x);
  const auto generic = recover(a, freq_view, c_freq);
  run.freq_generic = generic.reconstruction;
  run.freq_corrected = recover_pgs(dec, model, sampling_kernel, c_freq);

  const auto vertex_set = greedy_select_rows<double>(a, k, Criterion::EOpt);
  const auto vertex_view = vertex_sampling_view(g, dec, VertexSampler<double>{vertex_set.ordered_nodes, {}});
  const auto vertex = recover(a, vertex_view, vertex_view.apply(run.x));
  run.vertex = vertex.reconstruction;

  const double e_generic = relative_error(run.freq_generic, run.x);
  const double e_corrected = relative_error(run.freq_corrected, run.x);
  const double e_vertex = relative_error(run.vertex, run.x);
  const double agreement = (run.freq_generic - run.freq_corrected).norm() / run.x.norm();
  const Eigen::VectorXd h =
      pgs_correction_kernel<double>(sampling_kernel, model.generator, dec.eigenvalues, k, policy);

  run.passed = e_generic < 1e-8 && e_corrected < 1e-8 && e_vertex < 1e-8 && agreement < 1e-8;
  run.report = {{"k", k},
                {"m", k},
                {"fold", policy == FoldPolicy::AllowPartial ? "partial" : "divisible"},
                {"frequency_generic_error", e_generic},
                {"frequency_corrected_error", e_corrected},
                {"frequency_paths_agreement", agreement},
                {"frequency_ds_condition_held", generic.ds_condition_held},
                {"frequency_smallest_singular_value", generic.smallest_singular_value},
                {"vertex_error", e_vertex},
                {"vertex_ds_condition_held", vertex.ds_condition_held},
                {"vertex_smallest_singular_value", vertex.smallest_singular_value},
                {"vertex_sampling_set", vertex_set.ordered_nodes},
                {"max_abs_correction", h.cwiseAbs().maxCoeff()},
                {"passed", run.passed}};
  return run;
}

ExperimentResult fig4_bottom(const ExperimentConfig& cfg) {
  const Params p(cfg);
  const auto n = p.positive("n");
  const auto k = p.positive("k");
  const auto k_exact = p.positive("k_exact");
  require(k <= n && k_exact <= n, ErrorCode::InvalidSpec, "k must not exceed n");
  require(n % k == 0, ErrorCode::InvalidSpec, "primary run needs k | n");
  const double tau = p.real("tau");
  require(tau > 0.0, ErrorCode::InvalidSpec, "tau must be positive");

  const Graph g = gen_graph({RandomSensor{n, static_cast<int>(p.positive("k_neighbors"))}, cfg.seed});
  const auto dec = eigendecompose<double>(g, p.operator_kind());
  std::mt19937_64 rng(cfg.seed ^ 0x5157'0000'0000'0002ULL);
  const PgsRun primary = pgs_run(dec, g, k, FoldPolicy::RequireDivisible, tau, rng);
  const PgsRun exact = pgs_run(dec, g, k_exact, FoldPolicy::AllowPartial, tau, rng);

  ExperimentResult r;
  r.passed = primary.passed;
  r.report = {{"primary", primary.report}, {"exact", exact.report}};

  auto os = table_stream();
  os << "index,lambda,x_hat,a,g\n";
  const Eigen::VectorXd xhat = gft(dec, primary.x);
  const double lambda_max = dec.eigenvalues.maxCoeff();
  for (Eigen::Index i = 0; i < dec.size(); ++i) {
    const double l = dec.eigenvalues[i];
    os << i << ',' << l << ',' << xhat[i] << ',' << 1.0 - 2.0 * l / lambda_max << ','
       << std::exp(-l / tau) << '\n';
  }
  r.csv_files["spectrum.csv"] = os.str();
  r.csv_files["signal.csv"] = csv_signal(primary.x);
  r.csv_files["frequency_reconstruction.csv"] = csv_signal(primary.freq_corrected);
  r.csv_files["vertex_reconstruction.csv"] = csv_signal(primary.vertex);
  return r;
}

// ---------------------------------------------------------------------------

int coverage(const std::vector<NodeIndex>& nodes, const std::vector<int>& labels) {
  std::set<int> seen;
  for (NodeIndex v : nodes) seen.insert(labels[static_cast<std::size_t>(v)]);
  return static_cast<int>(seen.size());
}

std::uint64_t trial_seed(std::uint64_t seed, long trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

ExperimentResult community_selection(const ExperimentConfig& cfg) {
  const Params p(cfg);
  Community spec;
  for (long s : p.integers("cluster_sizes")) spec.cluster_sizes.push_back(s);
  spec.p_in = p.real("p_in");
  spec.p_out = p.real("p_out");
  const auto m = p.positive("m");
  const auto k = p.positive("k");
  const auto trials = p.positive("trials");

  const Graph g = gen_graph({spec, cfg.seed});
  const auto labels = community_labels(spec);
  const int clusters = static_cast<int>(spec.cluster_sizes.size());
  const auto dec = eigendecompose<double>(g, p.operator_kind());
  require(k <= dec.size() && m <= dec.size(), ErrorCode::InvalidSpec, "k and m must not exceed N");

  const auto eopt = greedy_select(dec, k, m, Criterion::EOpt);
  const auto localized =
      greedy_select_localized(dec, parse_kernel(p.str("localized_kernel"), dec.eigenvalues), m);
  const auto coherence = coherence_distribution(dec, k);
  const auto uniform = uniform_distribution(dec.size());

  double coherence_mean = 0.0;
  double uniform_mean = 0.0;
  SelectionResult coherence_first, uniform_first;
  for (long t = 0; t < trials; ++t) {
    const auto cs = random_select(coherence, m, trial_seed(cfg.seed, 2 * t));
    const auto us = random_select(uniform, m, trial_seed(cfg.seed, 2 * t + 1));
    coherence_mean += coverage(cs.ordered_nodes, labels);
    uniform_mean += coverage(us.ordered_nodes, labels);
    if (t == 0) {
      coherence_first = cs;
      uniform_first = us;
    }
  }
  coherence_mean /= static_cast<double>(trials);
  uniform_mean /= static_cast<double>(trials);

  const int eopt_cov = coverage(eopt.ordered_nodes, labels);
  const int localized_cov = coverage(localized.ordered_nodes, labels);
  const bool connected = component_count(g) == 1;

  ExperimentResult r;
  r.passed = connected && eopt_cov >= clusters - 1 && localized_cov >= clusters - 1 &&
             uniform_mean < std::min(eopt_cov, localized_cov);
  r.report = {{"nodes", g.node_count()},
              {"clusters", clusters},
              {"connected", connected},
              {"coverage",
               {{"eopt", eopt_cov},
                {"localized", localized_cov},
                {"coherence_random_mean", coherence_mean},
                {"uniform_random_mean", uniform_mean}}},
              {"eopt", io::to_json(eopt)},
              {"localized", io::to_json(localized)}};

  auto os = table_stream();
  os << "strategy,step,node,cluster\n";
  auto emit = [&](const std::string& name, const SelectionResult& s) {
    for (std::size_t i = 0; i < s.ordered_nodes.size(); ++i)
      os << name << ',' << i << ',' << s.ordered_nodes[i] << ','
         << labels[static_cast<std::size_t>(s.ordered_nodes[i])] << '\n';
  };
  emit("eopt", eopt);
  emit("localized", localized);
  emit("coherence", coherence_first);
  emit("uniform", uniform_first);
  r.csv_files["selections.csv"] = os.str();
  return r;
}

// ---------------------------------------------------------------------------

Graph mc_graph(const std::string& kind, NodeIndex n, std::uint64_t seed) {
  if (kind == "path") return gen_graph({PathGraph{n}, seed});
  if (kind == "community") {
    require(n >= 2, ErrorCode::InvalidSpec, "community graph needs at least 2 nodes");
    for (std::uint64_t attempt = 0;; ++attempt) {
      Graph g = gen_graph({Community{{n / 2, n - n / 2}, 0.8, 0.05}, seed + attempt});
      if (component_count(g) == 1 || attempt == 64) return g;
    }
  }
  throw Error(ErrorCode::InvalidSpec, "graph kind must be path or community");
}

ExperimentResult mc_demo(const ExperimentConfig& cfg) {
  const Params p(cfg);
  const auto nr = p.positive("rows");
  const auto nc = p.positive("cols");
  const auto kr = p.positive("k_rows");
  const auto kc = p.positive("k_cols");
  require(kr <= nr && kc <= nc, ErrorCode::InvalidSpec, "bandwidths must not exceed the sizes");
  const double alpha = p.real("alpha");
  const double beta = p.real("beta");
  const double tol = p.real("tol");
  const auto sides = p.integers("cross_sides");

  const Graph gr = mc_graph(p.str("row_graph"), nr, cfg.seed);
  const Graph gc = mc_graph(p.str("col_graph"), nc, cfg.seed + 1);
  const auto dr = eigendecompose<double>(gr, Kind::Combinatorial);
  const auto dc = eigendecompose<double>(gc, Kind::Combinatorial);
  std::mt19937_64 rng(cfg.seed ^ 0x5157'0000'0000'0004ULL);
  const Eigen::VectorXd coeffs = normal_vector(kr * kc, 0.0, 1.0, rng);
  const Eigen::MatrixXd d = Eigen::Map<const Eigen::MatrixXd>(coeffs.data(), kr, kc);
  const Eigen::MatrixXd x = dr.low_band(kr) * d * dc.low_band(kc).transpose();

  long max_budget = 0;
  for (long s : sides) {
    require(s <= nr && s <= nc, ErrorCode::InvalidSpec, "cross side exceeds the matrix size");
    max_budget = std::max(max_budget, s * s);
  }
  const auto greedy = active_sample_greedy<double>(gr, gc, alpha, beta, max_budget);

  auto fill = [&](const std::vector<Entry>& entries) {
    const auto prob =
        make_completion_problem<double>(x, mask_from_entries(nr, nc, entries), gr, gc, alpha, beta);
    return dglr_solve(prob, tol).x;
  };

  ExperimentResult r;
  json curve = json::array();
  auto os = table_stream();
  os << "budget,rmse_greedy,rmse_blcross,rmse_mean_fill\n";
  for (long s : sides) {
    const long budget = s * s;
    const std::vector<Entry> prefix(greedy.entries.begin(), greedy.entries.begin() + budget);
    const auto cross = bl_cross_sample(gr, gc, s, s);
    double mean = 0.0;
    for (const auto& [i, j] : cross.entries) mean += x(i, j);
    mean /= static_cast<double>(cross.entries.size());
    const double e_greedy = rmse(fill(prefix), x);
    const double e_cross = rmse(fill(cross.entries), x);
    const double e_mean = rmse(Eigen::MatrixXd::Constant(nr, nc, mean), x);
    curve.push_back({{"budget", budget},
                     {"rmse_greedy", e_greedy},
                     {"rmse_blcross", e_cross},
                     {"rmse_mean_fill", e_mean}});
    os << budget << ',' << e_greedy << ',' << e_cross << ',' << e_mean << '\n';
  }
  r.passed = true;
  r.report = {{"signal_rms", std::sqrt(x.squaredNorm() / static_cast<double>(x.size()))},
              {"curve", curve}};
  r.csv_files["rmse_vs_budget.csv"] = os.str();
  std::ostringstream matrix;
  io::write_triples(matrix, io::dense_to_triples(x));
  r.csv_files["matrix.csv"] = matrix.str();
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t)
      out[k] += x[t] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k * t) /
                                           static_cast<double>(n));
  return out;
}

ExperimentResult dft_folding(const ExperimentConfig& cfg) {
  const Params p(cfg);
  const auto n = p.positive("length");
  const auto factor = p.positive("factor");
  require(n % factor == 0, ErrorCode::InvalidSpec, "factor must divide length");
  const long m = n / factor;

  std::mt19937_64 rng(cfg.seed ^ 0x5157'0000'0000'0005ULL);
  const Eigen::VectorXd values = normal_vector(n, 0.0, 1.0, rng);
  std::vector<std::complex<double>> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(m));
  for (long i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = values[i];
  for (long i = 0; i < m; ++i) y[static_cast<std::size_t>(i)] = values[i * factor];
  const auto big = dft(x);
  const auto small = dft(y);

  double worst = 0.0;
  auto os = table_stream();
  os << "k,decimated_re,decimated_im,folded_re,folded_im\n";
  for (long k = 0; k < m; ++k) {
    std::complex<double> folded = 0.0;
    for (long l = 0; l < factor; ++l) folded += big[static_cast<std::size_t>(k + l * m)];
    folded /= static_cast<double>(factor);
    const auto lhs = small[static_cast<std::size_t>(k)];
    worst = std::max(worst, std::abs(lhs - folded));
    os << k << ',' << lhs.real() << ',' << lhs.imag() << ',' << folded.real() << ','
       << folded.imag() << '\n';
  }
  ExperimentResult r;
  r.passed = worst < 1e-12;
  r.report = {{"max_abs_difference", worst}, {"length", n}, {"factor", factor}};
  r.csv_files["folding.csv"] = os.str();
  return r;
}

}  // namespace

std::string to_string(ExperimentId id) { return id_names().at(id); }

ExperimentId parse_experiment_id(const std::string& name) {
  for (const auto& [id, n] : id_names())
    if (lower(n) == lower(name)) return id;
  throw Error(ErrorCode::InvalidSpec, "unknown experiment '" + name + "'");
}

std::vector<ExperimentId> all_experiments() {
  std::vector<ExperimentId> ids;
  for (const auto& [id, n] : id_names()) ids.push_back(id);
  return ids;
}

std::map<std::string, std::string> default_overrides(ExperimentId id) {
  switch (id) {
    case ExperimentId::Fig4Top:
      return {{"n", "64"}, {"k_neighbors", "6"}, {"k", "15"}, {"m", "15"},
              {"operator", "combinatorial"}};
    case ExperimentId::Fig4Bottom:
      return {{"n", "64"},  {"k_neighbors", "6"}, {"k", "16"}, {"k_exact", "15"},
              {"tau", "2"}, {"operator", "combinatorial"}};
    case ExperimentId::CommunitySelection:
      return {{"cluster_sizes", "8,8,16,32,64,128"},
              {"p_in", "0.8"},
              {"p_out", "0.01"},
              {"m", "10"},
              {"k", "10"},
              {"localized_kernel", "ideal_lowpass:10"},
              {"trials", "100"},
              {"operator", "combinatorial"}};
    case ExperimentId::MCDemo:
      return {{"rows", "16"},         {"cols", "16"},           {"k_rows", "3"},
              {"k_cols", "3"},        {"alpha", "0.001"},       {"beta", "0.001"},
              {"tol", "1e-10"},       {"cross_sides", "1,2,3,4,5"}, {"row_graph", "path"},
              {"col_graph", "community"}};
    case ExperimentId::DftFoldingSanity:
      return {{"length", "8"}, {"factor", "2"}};
  }
  return {};
}

void ExperimentConfig::validate() const {
  const auto known = default_overrides(id);
  for (const auto& [k, v] : overrides)
    require(known.count(k) == 1, ErrorCode::InvalidSpec,
            "unknown override '" + k + "' for " + to_string(id));
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorCode::ParseError, "experiment config must be a JSON object");
  for (const auto& [k, v] : j.items())
    require(k == "experiment" || k == "seed" || k == "overrides", ErrorCode::InvalidSpec,
            "unknown config key '" + k + "'");
  require(j.contains("experiment") && j["experiment"].is_string(), ErrorCode::ParseError,
          "config needs an \"experiment\" name");
  ExperimentConfig cfg;
  cfg.id = parse_experiment_id(j["experiment"].get<std::string>());
  if (j.contains("seed")) {
    require(j["seed"].is_number_unsigned(), ErrorCode::ParseError, "seed must be a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("overrides")) {
    require(j["overrides"].is_object(), ErrorCode::ParseError, "overrides must be an object");
    for (const auto& [k, v] : j["overrides"].items()) {
      require(v.is_primitive() && !v.is_null(), ErrorCode::ParseError,
              "override '" + k + "' must be a scalar");
      cfg.overrides[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  ExperimentResult r;
  switch (cfg.id) {
    case ExperimentId::Fig4Top: r = fig4_top(cfg); break;
    case ExperimentId::Fig4Bottom: r = fig4_bottom(cfg); break;
    case ExperimentId::CommunitySelection: r = community_selection(cfg); break;
    case ExperimentId::MCDemo: r = mc_demo(cfg); break;
    case ExperimentId::DftFoldingSanity: r = dft_folding(cfg); break;
  }
  r.report["experiment"] = to_string(cfg.id);
  r.report["seed"] = cfg.seed;
  r.report["parameters"] = Params(cfg).to_json();
  r.report["passed"] = r.passed;
  return r;
}

std::filesystem::path write_result(const ExperimentResult& result, const std::filesystem::path& dir) {
  const auto out = dir / result.report.at("experiment").get<std::string>();
  std::filesystem::create_directories(out);
  io::write_file(out / "report.json", result.report.dump(2) + "\n");
  for (const auto& [name, content] : result.csv_files) io::write_file(out / name, content);
  return out;
}

}  // namespace gsp
