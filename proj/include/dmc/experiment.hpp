#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dmc/alignment.hpp"
#include "dmc/generators.hpp"
#include "dmc/graph.hpp"
#include "dmc/sampling.hpp"

namespace dmc {

/// Invalid experiment configuration; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct SourceSpec {
  std::string path;                       // edge-list file; empty when generated
  bool weighted = false;
  char delimiter = '\0';
  std::optional<GeneratorSpec> generator;
};

struct SamplerSpec {
  SamplerKind kind = SamplerKind::edge_deletion;
  std::size_t n = 0;    // random-walk sample size; 0 keeps the whole graph
  double p = 0.9;       // overlap fraction
  double p_d = 0.01;    // deletion probability
};

// Flat key = value settings. Keys:
//   source.path, source.weighted, source.delimiter
//   generator.model, generator.n, generator.k, generator.p_er,
//   generator.m_attach, generator.lambda
//   sampler (random_walk | edge_deletion), sampler.n, sampler.p, sampler.p_d
//   methods (comma list, e.g. "dmc, greedy_dmc:10"), trials, seed, output,
//   jobs, timing
struct ExperimentConfig {
  SourceSpec source;
  SamplerSpec sampler;
  std::vector<MethodSpec> methods{MethodSpec{}};
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::string output;
  unsigned jobs = 1;
  bool timing = true;  // false writes wall_ms as 0 so reruns are byte-identical

  void validate() const;
};

void set_config_value(ExperimentConfig& cfg, std::string_view key, std::string_view value);
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);
/// Key = value text that parse_config reads back to the same config.
std::string format_config(const ExperimentConfig& cfg);

struct TrialRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  MethodSpec method;
  std::size_t n = 0;
  std::size_t common = 0;
  double score = 0.0;
  double total_cost = 0.0;
  double wall_ms = 0.0;
};

struct MethodSummary {
  MethodSpec method;
  std::size_t trials = 0;
  double mean_score = 0.0;
  double stdev_score = 0.0;
  double mean_total_cost = 0.0;
  double mean_wall_ms = 0.0;
};

/// Seed of trial `t`: base seed + t.
inline std::uint64_t trial_seed(const ExperimentConfig& cfg, std::size_t t) {
  return cfg.seed + t;
}

/// Source graph for one trial: the loaded file, or a fresh generated graph.
Graph trial_graph(const ExperimentConfig& cfg, const Graph* loaded, std::uint64_t seed);
/// Graph pair for one trial, sampled from `graph` as configured.
GraphPair trial_pair(const ExperimentConfig& cfg, const Graph& graph, std::uint64_t seed);

/// Runs every trial and method; rows come back in (trial, method) order.
std::vector<TrialRow> run_trials(const ExperimentConfig& cfg);
std::vector<MethodSummary> summarize(const std::vector<TrialRow>& rows,
                                     const std::vector<MethodSpec>& methods);

inline constexpr const char* kResultsHeader =
    "trial,seed,method,epsilon,n,common,score,total_cost,wall_ms";

void write_results_csv(std::ostream& out, const std::vector<TrialRow>& rows, bool header = true,
                       const std::string& prefix = {});
void write_summary_csv(std::ostream& out, const std::vector<MethodSummary>& summary);
void print_summary(std::ostream& out, const std::vector<MethodSummary>& summary);

struct ExperimentOutput {
  std::vector<TrialRow> rows;
  std::vector<MethodSummary> summary;
};

/// run_trials + summarize; writes results.csv, summary.csv and config.txt to
/// cfg.output when it is set.
ExperimentOutput run_experiment(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------

struct SweepPoint {
  double value = 0.0;
  std::vector<TrialRow> rows;
  std::vector<MethodSummary> summary;
};

struct SweepResult {
  std::string axis;
  std::vector<SweepPoint> points;
};

inline constexpr const char* kSweepAxes[] = {"p_d", "p", "k", "epsilon", "lambda"};

/// Config with `axis` set to `value`.
ExperimentConfig with_axis_value(const ExperimentConfig& cfg, const std::string& axis, double value);

/// One experiment per value; writes sweep.csv and sweep_summary.csv to
/// cfg.output when it is set.
SweepResult sweep(const ExperimentConfig& cfg, const std::string& axis,
                  const std::vector<double>& values);

/// Spearman correlation between axis value and mean score of `method`.
double sweep_trend(const SweepResult& result, const MethodSpec& method);
void print_sweep(std::ostream& out, const SweepResult& result);

// ---------------------------------------------------------------------------

struct GraphReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  DegreeStats degrees;
  double density = 0.0;
  double clustering = 0.0;
};

GraphReport stats_report(const Graph& g);
void print_report(std::ostream& out, const GraphReport& report);

}  // namespace dmc
