// dmc: command-line front end for degree-matrix graph alignment.
//
//   dmc align      align one graph pair with one method
//   dmc sample     draw a graph pair from an edge list
//   dmc experiment config-driven repeated trials
//   dmc sweep      experiment repeated over one parameter axis
//   dmc stats      degree / density / clustering report for an edge list
//   dmc gen        write a synthetic graph as an edge list

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dmc/alignment.hpp"
#include "dmc/experiment.hpp"
#include "dmc/generators.hpp"
#include "dmc/sampling.hpp"

namespace fs = std::filesystem;

namespace {

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<std::string> out;
  std::vector<std::string> methods;
  std::optional<double> epsilon;
  bool weighted = false;
  std::optional<double> pd;
  std::optional<double> overlap;
  std::optional<unsigned> jobs;
  bool no_timing = false;
  bool quiet = false;
  std::vector<std::string> sets;
};

void add_override_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config, "key = value experiment file");
  cmd->add_option("--seed", o.seed, "base seed (trial t uses seed + t)");
  cmd->add_option("--trials", o.trials, "number of trials");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--method", o.methods, "dmc | greedy_dmc[:eps] | weighted_dmc (repeatable)");
  cmd->add_option("--epsilon", o.epsilon, "epsilon for greedy_dmc");
  cmd->add_flag("--weighted", o.weighted, "treat the source graph as weighted");
  cmd->add_option("--pd", o.pd, "edge-deletion probability (selects edge_deletion)");
  cmd->add_option("--overlap", o.overlap, "overlap fraction p (selects random_walk)");
  cmd->add_option("--jobs", o.jobs, "worker threads");
  cmd->add_flag("--no-timing", o.no_timing, "write wall_ms as 0 for byte-identical reruns");
  cmd->add_flag("-q,--quiet", o.quiet, "no summary on stdout");
  cmd->add_option("--set", o.sets, "extra key=value setting (repeatable)");
}

dmc::ExperimentConfig build_config(const Overrides& o) {
  dmc::ExperimentConfig cfg = o.config.empty() ? dmc::ExperimentConfig{} : dmc::load_config(o.config);
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw dmc::ConfigError(kv, "--set expects key=value");
    dmc::set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.trials) cfg.trials = *o.trials;
  if (o.out) cfg.output = *o.out;
  if (o.jobs) cfg.jobs = *o.jobs;
  if (o.weighted) cfg.source.weighted = true;
  if (o.no_timing) cfg.timing = false;
  if (o.pd) {
    cfg.sampler.kind = dmc::SamplerKind::edge_deletion;
    cfg.sampler.p_d = *o.pd;
  }
  if (o.overlap) {
    cfg.sampler.kind = dmc::SamplerKind::random_walk;
    cfg.sampler.p = *o.overlap;
  }
  if (!o.methods.empty()) {
    std::string joined;
    for (const auto& m : o.methods) joined += m + ",";
    dmc::set_config_value(cfg, "methods", joined);
  }
  if (o.epsilon) {
    bool any = false;
    for (auto& m : cfg.methods)
      if (m.method == dmc::Method::greedy_dmc) {
        m.epsilon = *o.epsilon;
        any = true;
      }
    if (!any) throw dmc::ConfigError("epsilon", "no greedy_dmc method to apply it to");
  }
  cfg.validate();
  return cfg;
}

std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw dmc::ConfigError("values", "invalid number '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw dmc::ConfigError("values", "no values given");
  return values;
}

template <typename Scalar>
void dump_matrix(const std::string& path, const dmc::DegreeMatrix<Scalar>& m) {
  std::ofstream out(path);
  const Eigen::IOFormat csv(Eigen::FullPrecision, Eigen::DontAlignCols, ",", "\n");
  out << m.rows.format(csv) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree matrix comparison for unattributed graph alignment"};
  app.require_subcommand(1);

  // align
  auto* align_cmd = app.add_subcommand("align", "align one graph pair");
  std::string g1_path, g2_path, common_path, pair_dir, align_out;
  std::string method_name = "dmc";
  double align_eps = 0.0;
  bool align_weighted = false, dump = false, align_quiet = false;
  align_cmd->add_option("--g1", g1_path, "first graph edge list");
  align_cmd->add_option("--g2", g2_path, "second graph edge list");
  align_cmd->add_option("--common", common_path, "ground-truth labels, one per line");
  align_cmd->add_option("--pair", pair_dir, "pair directory written by `dmc sample`");
  align_cmd->add_option("--method", method_name, "dmc | greedy_dmc[:eps] | weighted_dmc");
  align_cmd->add_option("--epsilon", align_eps, "epsilon for greedy_dmc");
  align_cmd->add_flag("--weighted", align_weighted, "read weights from the edge lists");
  align_cmd->add_option("--out", align_out, "directory for mapping.csv and result.csv");
  align_cmd->add_flag("--dump-matrices", dump, "also write the degree matrices as CSV");
  align_cmd->add_flag("-q,--quiet", align_quiet, "no report on stdout");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw an aligned graph pair from an edge list");
  std::string sample_in, sample_out;
  std::optional<double> sample_pd, sample_overlap;
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  bool sample_weighted = false;
  sample_cmd->add_option("input", sample_in, "source edge list")->required();
  sample_cmd->add_option("--out", sample_out, "pair directory")->required();
  sample_cmd->add_option("--pd", sample_pd, "edge-deletion probability");
  sample_cmd->add_option("--overlap", sample_overlap, "overlap fraction p");
  sample_cmd->add_option("--n", sample_n, "random-walk sample size (0 = whole graph)");
  sample_cmd->add_option("--seed", sample_seed, "seed");
  sample_cmd->add_flag("--weighted", sample_weighted, "read weights");

  // experiment / sweep
  auto* exp_cmd = app.add_subcommand("experiment", "run repeated trials from a config");
  Overrides exp_o;
  add_override_flags(exp_cmd, exp_o);

  auto* sweep_cmd = app.add_subcommand("sweep", "repeat an experiment over one parameter axis");
  Overrides sweep_o;
  std::string axis, values_text;
  add_override_flags(sweep_cmd, sweep_o);
  sweep_cmd->add_option("--axis", axis, "p_d | p | k | epsilon | lambda")->required();
  sweep_cmd->add_option("--values", values_text, "comma-separated axis values")->required();

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "dataset report");
  std::string stats_path;
  bool stats_weighted = false;
  stats_cmd->add_option("input", stats_path, "edge list")->required();
  stats_cmd->add_flag("--weighted", stats_weighted, "read weights");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "write a synthetic graph");
  dmc::GeneratorSpec gen;
  std::string gen_model = "barabasi_albert", gen_out;
  gen_cmd->add_option("--model", gen_model, "er_kpartite | barabasi_albert | chung_lu_poisson");
  gen_cmd->add_option("--n", gen.n, "node count");
  gen_cmd->add_option("--k", gen.k, "partite groups");
  gen_cmd->add_option("--p-er", gen.p_er, "ER edge probability");
  gen_cmd->add_option("--m", gen.m_attach, "BA edges per new node");
  gen_cmd->add_option("--lambda", gen.lambda, "Chung-Lu Poisson mean");
  gen_cmd->add_option("--seed", gen.seed, "seed");
  gen_cmd->add_option("--out", gen_out, "output edge list (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*align_cmd) {
      dmc::GraphPair pair;
      if (!pair_dir.empty()) {
        pair = dmc::load_pair(pair_dir, align_weighted);
      } else {
        if (g1_path.empty() || g2_path.empty())
          throw dmc::ConfigError("align", "give --pair DIR or both --g1 and --g2");
        dmc::EdgeListOptions opts;
        opts.weighted = align_weighted;
        pair.g1 = dmc::load_edge_list(g1_path, opts).graph;
        pair.g2 = dmc::load_edge_list(g2_path, opts).graph;
        if (!common_path.empty()) {
          std::ifstream in(common_path);
          if (!in) throw std::runtime_error("cannot open '" + common_path + "'");
          for (std::string line; std::getline(in, line);)
            if (!line.empty()) pair.common_labels.push_back(line);
        } else {
          for (const auto& l : pair.g1.labels())
            if (pair.g2.has_label(l)) pair.common_labels.push_back(l);
        }
      }
      dmc::MethodSpec spec = dmc::parse_method(method_name);
      if (align_cmd->count("--epsilon")) {
        if (spec.method != dmc::Method::greedy_dmc)
          throw dmc::ConfigError("epsilon", "only greedy_dmc takes an epsilon");
        spec.epsilon = align_eps;
        spec.validate();
      }
      const dmc::AlignmentResult r = dmc::align(pair, spec);
      if (!align_out.empty()) {
        fs::create_directories(align_out);
        std::ofstream map_out(fs::path(align_out) / "mapping.csv");
        map_out << "g1_label,g2_label\n";
        for (std::size_t i = 0; i < r.node_map.size(); ++i)
          map_out << pair.g1.label(i) << ',' << pair.g2.label(r.node_map[i]) << '\n';
        std::ofstream res_out(fs::path(align_out) / "result.csv");
        dmc::TrialRow row;
        row.seed = pair.params.seed;
        row.method = spec;
        row.n = pair.g1.num_nodes();
        row.common = pair.common_labels.size();
        row.score = r.score;
        row.total_cost = r.total_cost;
        row.wall_ms = r.wall.count();
        dmc::write_results_csv(res_out, {row});
        if (dump) {
          const auto [m1, m2] = spec.method == dmc::Method::weighted_dmc
                                    ? dmc::build_weighted_degree_matrices(pair.g1, pair.g2)
                                    : dmc::build_degree_matrices(pair.g1, pair.g2);
          dump_matrix((fs::path(align_out) / "m1.csv").string(), m1);
          dump_matrix((fs::path(align_out) / "m2.csv").string(), m2);
        }
      }
      if (!align_quiet)
        std::cout << "method     " << dmc::to_string(spec) << '\n'
                  << "nodes      " << pair.g1.num_nodes() << '\n'
                  << "common     " << pair.common_labels.size() << '\n'
                  << "score      " << r.score << '\n'
                  << "total_cost " << r.total_cost << '\n'
                  << "fixed      " << r.fixed_pairs << '\n'
                  << "wall_ms    " << r.wall.count() << '\n';
    } else if (*sample_cmd) {
      if (sample_pd.has_value() == sample_overlap.has_value())
        throw dmc::ConfigError("sample", "give exactly one of --pd or --overlap");
      dmc::EdgeListOptions opts;
      opts.weighted = sample_weighted;
      const dmc::Graph g = dmc::load_edge_list(sample_in, opts).graph;
      dmc::ExperimentConfig cfg;
      cfg.source.path = sample_in;
      cfg.sampler.n = sample_n;
      if (sample_pd) {
        cfg.sampler.kind = dmc::SamplerKind::edge_deletion;
        cfg.sampler.p_d = *sample_pd;
      } else {
        cfg.sampler.kind = dmc::SamplerKind::random_walk;
        cfg.sampler.p = *sample_overlap;
      }
      cfg.validate();
      dmc::save_pair(dmc::trial_pair(cfg, g, sample_seed), sample_out);
    } else if (*exp_cmd) {
      const dmc::ExperimentConfig cfg = build_config(exp_o);
      const auto result = dmc::run_experiment(cfg);
      if (!exp_o.quiet) dmc::print_summary(std::cout, result.summary);
      if (cfg.output.empty()) dmc::write_results_csv(std::cout, result.rows);
    } else if (*sweep_cmd) {
      const dmc::ExperimentConfig cfg = build_config(sweep_o);
      const auto result = dmc::sweep(cfg, axis, parse_values(values_text));
      if (!sweep_o.quiet) dmc::print_sweep(std::cout, result);
    } else if (*stats_cmd) {
      dmc::EdgeListOptions opts;
      opts.weighted = stats_weighted;
      const auto load = dmc::load_edge_list(stats_path, opts);
      dmc::print_report(std::cout, dmc::stats_report(load.graph));
      if (load.duplicates_collapsed || load.self_loops_dropped)
        std::cout << "dropped     " << load.duplicates_collapsed << " duplicate edges, "
                  << load.self_loops_dropped << " self-loops\n";
    } else if (*gen_cmd) {
      gen.model = dmc::parse_generator_model(gen_model);
      const dmc::Graph g = dmc::generate(gen);
      if (gen_out.empty())
        dmc::write_edge_list(std::cout, g);
      else
        dmc::save_edge_list(gen_out, g);
    }
  } catch (const dmc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const dmc::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
