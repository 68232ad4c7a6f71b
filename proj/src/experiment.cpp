#include "dmc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <cctype>
#include <ostream>
#include <sstream>
#include <thread>

#include "dmc/random.hpp"
#include "dmc/stats.hpp"

namespace dmc {
namespace {

// Sub-stream ids for the stages of one trial.
constexpr std::uint64_t kGenerateStream = 10;
constexpr std::uint64_t kWalkStream = 11;
constexpr std::uint64_t kPairStream = 12;

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

double to_double(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size())
    throw ConfigError(std::string(key), "expected a number, got '" + v + "'");
  return x;
}

std::uint64_t to_unsigned(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + v + "'");
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw ConfigError(std::string(key), "integer out of range: '" + v + "'");
  }
}

bool to_bool(std::string_view key, std::string_view value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(std::string(key), "expected true/false, got '" + v + "'");
}

GeneratorSpec& generator_of(ExperimentConfig& cfg) {
  if (!cfg.source.generator) cfg.source.generator.emplace();
  return *cfg.source.generator;
}

std::string fmt_g(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

// --- configuration ---------------------------------------------------------

void set_config_value(ExperimentConfig& cfg, std::string_view key_in, std::string_view value) {
  const std::string key = trim(key_in);
  const std::string v = trim(value);
  if (key == "source.path") {
    cfg.source.path = v;
  } else if (key == "source.weighted") {
    cfg.source.weighted = to_bool(key, v);
  } else if (key == "source.delimiter") {
    if (v == "auto" || v.empty())
      cfg.source.delimiter = '\0';
    else if (v == "tab")
      cfg.source.delimiter = '\t';
    else if (v.size() == 1)
      cfg.source.delimiter = v[0];
    else
      throw ConfigError(key, "expected auto, tab or a single character");
  } else if (key == "generator.model") {
    try {
      generator_of(cfg).model = parse_generator_model(v);
    } catch (const ParameterError& e) {
      throw ConfigError(key, e.what());
    }
  } else if (key == "generator.n") {
    generator_of(cfg).n = to_unsigned(key, v);
  } else if (key == "generator.k") {
    generator_of(cfg).k = to_unsigned(key, v);
  } else if (key == "generator.p_er") {
    generator_of(cfg).p_er = to_double(key, v);
  } else if (key == "generator.m_attach") {
    generator_of(cfg).m_attach = to_unsigned(key, v);
  } else if (key == "generator.lambda") {
    generator_of(cfg).lambda = to_double(key, v);
  } else if (key == "sampler") {
    if (v == "random_walk")
      cfg.sampler.kind = SamplerKind::random_walk;
    else if (v == "edge_deletion")
      cfg.sampler.kind = SamplerKind::edge_deletion;
    else
      throw ConfigError(key, "expected random_walk or edge_deletion, got '" + v + "'");
  } else if (key == "sampler.n") {
    cfg.sampler.n = to_unsigned(key, v);
  } else if (key == "sampler.p") {
    cfg.sampler.p = to_double(key, v);
  } else if (key == "sampler.p_d") {
    cfg.sampler.p_d = to_double(key, v);
  } else if (key == "methods") {
    std::vector<MethodSpec> methods;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      try {
        methods.push_back(parse_method(item));
      } catch (const ParameterError& e) {
        throw ConfigError(key, e.what());
      }
    }
    cfg.methods = std::move(methods);
  } else if (key == "trials") {
    cfg.trials = to_unsigned(key, v);
  } else if (key == "seed") {
    cfg.seed = to_unsigned(key, v);
  } else if (key == "output") {
    cfg.output = v;
  } else if (key == "jobs") {
    cfg.jobs = static_cast<unsigned>(to_unsigned(key, v));
  } else if (key == "timing") {
    cfg.timing = to_bool(key, v);
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

void ExperimentConfig::validate() const {
  if (source.path.empty() && !source.generator)
    throw ConfigError("source", "set source.path or generator.model");
  if (!source.path.empty() && source.generator)
    throw ConfigError("source", "source.path and generator.* are mutually exclusive");
  if (source.generator) {
    const auto& g = *source.generator;
    if (g.n < 1) throw ConfigError("generator.n", "must be >= 1");
    if (g.model != GeneratorModel::barabasi_albert && (g.k < 1 || g.k > g.n))
      throw ConfigError("generator.k", "must satisfy 1 <= k <= generator.n");
    if (g.model == GeneratorModel::er_kpartite && !(g.p_er >= 0.0 && g.p_er <= 1.0))
      throw ConfigError("generator.p_er", "must lie in [0, 1]");
    if (g.model == GeneratorModel::barabasi_albert && (g.m_attach < 1 || g.n <= g.m_attach))
      throw ConfigError("generator.m_attach", "must satisfy 1 <= m_attach < generator.n");
    if (g.model == GeneratorModel::chung_lu_poisson && !(g.lambda > 0.0 && std::isfinite(g.lambda)))
      throw ConfigError("generator.lambda", "must be > 0");
  }
  if (sampler.kind == SamplerKind::random_walk && !(sampler.p > 0.0 && sampler.p <= 1.0))
    throw ConfigError("sampler.p", "must lie in (0, 1]");
  if (sampler.kind == SamplerKind::edge_deletion && !(sampler.p_d >= 0.0 && sampler.p_d < 1.0))
    throw ConfigError("sampler.p_d", "must lie in [0, 1)");
  if (methods.empty()) throw ConfigError("methods", "at least one method required");
  for (const auto& m : methods) {
    try {
      m.validate();
    } catch (const ParameterError& e) {
      throw ConfigError("methods", e.what());
    }
    if (m.method == Method::weighted_dmc && !source.weighted)
      throw ConfigError("methods", "weighted_dmc needs source.weighted = true");
  }
  if (trials < 1) throw ConfigError("trials", "must be >= 1");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    std::string body = trim(line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    set_config_value(cfg, body.substr(0, eq), body.substr(eq + 1));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path + "'");
  return parse_config(in);
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  if (!cfg.source.path.empty()) {
    out << "source.path = " << cfg.source.path << '\n';
    out << "source.weighted = " << (cfg.source.weighted ? "true" : "false") << '\n';
    if (cfg.source.delimiter == '\t')
      out << "source.delimiter = tab\n";
    else if (cfg.source.delimiter != '\0')
      out << "source.delimiter = " << cfg.source.delimiter << '\n';
  }
  if (cfg.source.generator) {
    const auto& g = *cfg.source.generator;
    out << "generator.model = " << to_string(g.model) << '\n'
        << "generator.n = " << g.n << '\n'
        << "generator.k = " << g.k << '\n'
        << "generator.p_er = " << fmt_g(g.p_er, 17) << '\n'
        << "generator.m_attach = " << g.m_attach << '\n'
        << "generator.lambda = " << fmt_g(g.lambda, 17) << '\n';
    if (cfg.source.weighted) out << "source.weighted = true\n";
  }
  out << "sampler = " << to_string(cfg.sampler.kind) << '\n'
      << "sampler.n = " << cfg.sampler.n << '\n'
      << "sampler.p = " << fmt_g(cfg.sampler.p, 17) << '\n'
      << "sampler.p_d = " << fmt_g(cfg.sampler.p_d, 17) << '\n';
  out << "methods = ";
  for (std::size_t i = 0; i < cfg.methods.size(); ++i)
    out << (i ? ", " : "") << to_string(cfg.methods[i]);
  out << '\n'
      << "trials = " << cfg.trials << '\n'
      << "seed = " << cfg.seed << '\n'
      << "timing = " << (cfg.timing ? "true" : "false") << '\n';
  return out.str();
}

// --- trials ----------------------------------------------------------------

Graph trial_graph(const ExperimentConfig& cfg, const Graph* loaded, std::uint64_t seed) {
  if (loaded) return *loaded;
  GeneratorSpec spec = *cfg.source.generator;
  spec.seed = derive_seed(seed, kGenerateStream);
  Graph g = generate(spec);
  return cfg.source.weighted ? with_unit_weights(g) : g;
}

GraphPair trial_pair(const ExperimentConfig& cfg, const Graph& graph, std::uint64_t seed) {
  const std::size_t n = cfg.sampler.n == 0 ? graph.num_nodes() : cfg.sampler.n;
  if (n > graph.num_nodes())
    throw ConfigError("sampler.n", "exceeds the source graph's " +
                                       std::to_string(graph.num_nodes()) + " nodes");
  const Graph sampled = n == graph.num_nodes()
                            ? graph
                            : random_walk_sample(graph, n, derive_seed(seed, kWalkStream));
  const std::uint64_t pair_seed = derive_seed(seed, kPairStream);
  if (cfg.sampler.kind == SamplerKind::random_walk)
    return overlap_pair(sampled, cfg.sampler.p, pair_seed);
  return edge_deletion_pair(sampled, cfg.sampler.p_d, pair_seed);
}

std::vector<TrialRow> run_trials(const ExperimentConfig& cfg) {
  cfg.validate();
  std::optional<Graph> loaded;
  if (!cfg.source.path.empty()) {
    EdgeListOptions opts;
    opts.weighted = cfg.source.weighted;
    opts.delimiter = cfg.source.delimiter;
    loaded = load_edge_list(cfg.source.path, opts).graph;
  }

  std::vector<std::vector<TrialRow>> per_trial(cfg.trials);
  std::vector<std::exception_ptr> errors(cfg.trials);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t t = next++; t < cfg.trials; t = next++) {
      try {
        const std::uint64_t seed = trial_seed(cfg, t);
        const Graph g = trial_graph(cfg, loaded ? &*loaded : nullptr, seed);
        const GraphPair pair = trial_pair(cfg, g, seed);
        for (const auto& method : cfg.methods) {
          const AlignmentResult r = align(pair, method);
          TrialRow row;
          row.trial = t;
          row.seed = seed;
          row.method = method;
          row.n = pair.g1.num_nodes();
          row.common = pair.common_labels.size();
          row.score = r.score;
          row.total_cost = r.total_cost;
          row.wall_ms = cfg.timing ? r.wall.count() : 0.0;
          per_trial[t].push_back(row);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };

  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(cfg.trials)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<TrialRow> rows;
  for (auto& v : per_trial) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

std::vector<MethodSummary> summarize(const std::vector<TrialRow>& rows,
                                     const std::vector<MethodSpec>& methods) {
  std::vector<MethodSummary> out;
  for (const auto& m : methods) {
    if (std::any_of(out.begin(), out.end(), [&](const MethodSummary& s) { return s.method == m; }))
      continue;
    std::vector<double> scores, costs, walls;
    for (const auto& r : rows)
      if (r.method == m) {
        scores.push_back(r.score);
        costs.push_back(r.total_cost);
        walls.push_back(r.wall_ms);
      }
    MethodSummary s;
    s.method = m;
    s.trials = scores.size();
    s.mean_score = mean(scores);
    s.stdev_score = stdev(scores);
    s.mean_total_cost = mean(costs);
    s.mean_wall_ms = mean(walls);
    out.push_back(s);
  }
  return out;
}

void write_results_csv(std::ostream& out, const std::vector<TrialRow>& rows, bool header,
                       const std::string& prefix) {
  if (header) out << kResultsHeader << '\n';
  for (const auto& r : rows) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
    out << prefix << r.trial << ',' << r.seed << ',' << to_string(r.method.method) << ','
        << (r.method.method == Method::greedy_dmc ? fmt_g(r.method.epsilon) : std::string()) << ','
        << r.n << ',' << r.common << ',' << fmt_g(r.score) << ',' << fmt_g(r.total_cost, 17)
        << ',' << buf << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<MethodSummary>& summary) {
  out << "method,epsilon,trials,mean_score,stdev_score,mean_total_cost,mean_wall_ms\n";
  for (const auto& s : summary)
    out << to_string(s.method.method) << ','
        << (s.method.method == Method::greedy_dmc ? fmt_g(s.method.epsilon) : std::string()) << ','
        << s.trials << ',' << fmt_g(s.mean_score) << ',' << fmt_g(s.stdev_score) << ','
        << fmt_g(s.mean_total_cost) << ',' << fmt_g(s.mean_wall_ms, 6) << '\n';
}

void print_summary(std::ostream& out, const std::vector<MethodSummary>& summary) {
  for (const auto& s : summary) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-18s trials=%-4zu score=%.4f +- %.4f  cost=%.6g  %.1f ms\n",
                  to_string(s.method).c_str(), s.trials, s.mean_score, s.stdev_score,
                  s.mean_total_cost, s.mean_wall_ms);
    out << buf;
  }
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg) {
  ExperimentOutput result;
  result.rows = run_trials(cfg);
  result.summary = summarize(result.rows, cfg.methods);
  if (!cfg.output.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output);
    std::ofstream results(fs::path(cfg.output) / "results.csv");
    write_results_csv(results, result.rows);
    std::ofstream summary(fs::path(cfg.output) / "summary.csv");
    write_summary_csv(summary, result.summary);
    std::ofstream config(fs::path(cfg.output) / "config.txt");
    config << format_config(cfg);
  }
  return result;
}

// --- sweeps ----------------------------------------------------------------

ExperimentConfig with_axis_value(const ExperimentConfig& cfg, const std::string& axis, double value) {
  ExperimentConfig c = cfg;
  if (axis == "p_d") {
    if (c.sampler.kind != SamplerKind::edge_deletion)
      throw ConfigError("axis", "p_d sweeps need sampler = edge_deletion");
    c.sampler.p_d = value;
  } else if (axis == "p") {
    if (c.sampler.kind != SamplerKind::random_walk)
      throw ConfigError("axis", "p sweeps need sampler = random_walk");
    c.sampler.p = value;
  } else if (axis == "k") {
    if (!c.source.generator || c.source.generator->model == GeneratorModel::barabasi_albert)
      throw ConfigError("axis", "k sweeps need an er_kpartite or chung_lu_poisson generator");
    if (!(value >= 1.0) || value != std::floor(value))
      throw ConfigError("axis", "k values must be positive integers");
    c.source.generator->k = static_cast<std::size_t>(value);
  } else if (axis == "lambda") {
    if (!c.source.generator || c.source.generator->model != GeneratorModel::chung_lu_poisson)
      throw ConfigError("axis", "lambda sweeps need a chung_lu_poisson generator");
    c.source.generator->lambda = value;
  } else if (axis == "epsilon") {
    bool any = false;
    for (auto& m : c.methods)
      if (m.method == Method::greedy_dmc) {
        m.epsilon = value;
        any = true;
      }
    if (!any) c.methods.push_back({Method::greedy_dmc, value});
  } else {
    throw ConfigError("axis", "unknown sweep axis '" + axis + "' (expected p_d, p, k, epsilon or lambda)");
  }
  return c;
}

SweepResult sweep(const ExperimentConfig& cfg, const std::string& axis,
                  const std::vector<double>& values) {
  SweepResult result;
  result.axis = axis;
  std::vector<ExperimentConfig> configs;
  for (double v : values) configs.push_back(with_axis_value(cfg, axis, v));
  for (const auto& c : configs) c.validate();

  for (std::size_t i = 0; i < values.size(); ++i) {
    ExperimentConfig c = configs[i];
    c.output.clear();
    SweepPoint point;
    point.value = values[i];
    point.rows = run_trials(c);
    point.summary = summarize(point.rows, c.methods);
    result.points.push_back(std::move(point));
  }

  if (!cfg.output.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(cfg.output);
    std::ofstream rows(fs::path(cfg.output) / "sweep.csv");
    rows << "axis,value," << kResultsHeader << '\n';
    for (const auto& p : result.points)
      write_results_csv(rows, p.rows, false, axis + "," + fmt_g(p.value) + ",");
    std::ofstream summary(fs::path(cfg.output) / "sweep_summary.csv");
    summary << "axis,value,method,epsilon,trials,mean_score,stdev_score,mean_total_cost,mean_wall_ms\n";
    for (const auto& p : result.points) {
      std::ostringstream block;
      write_summary_csv(block, p.summary);
      std::istringstream lines(block.str());
      std::string line;
      std::getline(lines, line);  // header
      while (std::getline(lines, line)) summary << axis << ',' << fmt_g(p.value) << ',' << line << '\n';
    }
    std::ofstream config(fs::path(cfg.output) / "config.txt");
    config << format_config(cfg) << "# sweep axis = " << axis << '\n';
  }
  return result;
}

double sweep_trend(const SweepResult& result, const MethodSpec& method) {
  std::vector<double> xs, ys;
  for (const auto& p : result.points)
    for (const auto& s : p.summary)
      if (s.method.method == method.method &&
          (method.method != Method::greedy_dmc || result.axis == "epsilon" ||
           s.method.epsilon == method.epsilon)) {
        xs.push_back(p.value);
        ys.push_back(s.mean_score);
      }
  return spearman(xs, ys);
}

void print_sweep(std::ostream& out, const SweepResult& result) {
  for (const auto& p : result.points) {
    out << result.axis << " = " << fmt_g(p.value) << '\n';
    print_summary(out, p.summary);
  }
  if (result.points.size() < 2) return;
  for (const auto& s : result.points.front().summary) {
    const double rho = sweep_trend(result, s.method);
    out << "spearman(" << result.axis << ", score) for "
        << (result.axis == "epsilon" && s.method.method == Method::greedy_dmc
                ? std::string("greedy_dmc")
                : to_string(s.method))
        << ": " << fmt_g(rho, 4) << '\n';
  }
}

// --- dataset report --------------------------------------------------------

GraphReport stats_report(const Graph& g) {
  GraphReport r;
  r.nodes = g.num_nodes();
  r.edges = g.num_edges();
  r.degrees = degree_stats(g);
  r.density = density(g);
  r.clustering = average_clustering(g);
  return r;
}

void print_report(std::ostream& out, const GraphReport& r) {
  out << "nodes       " << r.nodes << '\n'
      << "edges       " << r.edges << '\n'
      << "mean degree " << fmt_g(r.degrees.mean, 8) << '\n'
      << "variance    " << fmt_g(r.degrees.variance, 8) << '\n'
      << "max degree  " << r.degrees.max_degree << '\n'
      << "density     " << fmt_g(r.density, 8) << '\n'
      << "clustering  " << fmt_g(r.clustering, 8) << '\n';
}

}  // namespace dmc
