#pragma once

#include <cstdint>
#include <string>

#include "dmc/graph.hpp"

namespace dmc {

enum class GeneratorModel { er_kpartite, barabasi_albert, chung_lu_poisson };

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::barabasi_albert;
  std::size_t n = 100;
  std::size_t k = 1;          // partite groups (ER, Chung-Lu)
  double p_er = 0.5;
  std::size_t m_attach = 5;   // edges per new node (BA)
  double lambda = 10.0;       // Poisson mean of the Chung-Lu target degrees
  std::uint64_t seed = 0;

  void validate() const;
};

/// Group of node `i` under the round-robin k-partite split.
inline std::size_t partite_group(std::size_t i, std::size_t k) noexcept { return i % k; }

// Node labels of generated graphs are the decimal node indices.

/// k-partite Erdős–Rényi: every cross-group pair is an edge with probability p_er.
Graph gen_er_kpartite(std::size_t n, std::size_t k, double p_er, std::uint64_t seed);

/// Barabási–Albert preferential attachment grown from a clique on m + 1 nodes.
Graph gen_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed);

/// Chung-Lu with Poisson(lambda) target degrees (zeros redrawn), restricted to
/// cross-group pairs when k > 1.
Graph gen_chung_lu_poisson(std::size_t n, double lambda, std::size_t k, std::uint64_t seed);

/// Connection probability of the Chung-Lu model, clamped to 1.
inline double chung_lu_probability(double d_i, double d_j, double total) noexcept {
  const double p = d_i * d_j / total;
  return p < 1.0 ? p : 1.0;
}

Graph generate(const GeneratorSpec& spec);

GeneratorModel parse_generator_model(const std::string& name);
const char* to_string(GeneratorModel model);

}  // namespace dmc
