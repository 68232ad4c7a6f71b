#include "dmc/generators.hpp"

#include <algorithm>
#include <cmath>

#include "dmc/random.hpp"

namespace dmc {
namespace {

// Poisson(lambda) conditioned on >= 1. Redrawing zeros is exact but stalls for
// small lambda, so below 1 the truncated law is sampled by inversion.
long zero_truncated_poisson(double lambda, Rng& rng) {
  if (lambda >= 1.0) {
    std::poisson_distribution<long> poisson(lambda);
    long draw = 0;
    while (draw < 1) draw = poisson(rng);
    return draw;
  }
  const double u = uniform01(rng);
  double pk = lambda * std::exp(-lambda) / -std::expm1(-lambda);  // P(K = 1)
  double cdf = pk;
  long k = 1;
  while (u >= cdf && pk > 0.0) {
    ++k;
    pk *= lambda / static_cast<double>(k);
    cdf += pk;
  }
  return k;
}

}  // namespace

void GeneratorSpec::validate() const {
  if (n < 1) throw ParameterError("generator.n must be >= 1");
  switch (model) {
    case GeneratorModel::er_kpartite:
      if (k < 1 || k > n) throw ParameterError("generator.k must satisfy 1 <= k <= n");
      if (!(p_er >= 0.0 && p_er <= 1.0)) throw ParameterError("generator.p_er must lie in [0, 1]");
      break;
    case GeneratorModel::barabasi_albert:
      if (m_attach < 1) throw ParameterError("generator.m_attach must be >= 1");
      if (n <= m_attach) throw ParameterError("generator.n must exceed generator.m_attach");
      break;
    case GeneratorModel::chung_lu_poisson:
      if (k < 1 || k > n) throw ParameterError("generator.k must satisfy 1 <= k <= n");
      if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ParameterError("generator.lambda must be > 0");
      break;
  }
}

Graph gen_er_kpartite(std::size_t n, std::size_t k, double p_er, std::uint64_t seed) {
  GeneratorSpec{GeneratorModel::er_kpartite, n, k, p_er}.validate();
  Rng rng(seed);
  GraphBuilder b;
  b.add_nodes(n);
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j)
      if (partite_group(i, k) != partite_group(j, k) && uniform01(rng) < p_er) b.add_edge(i, j);
  return std::move(b).build();
}

Graph gen_barabasi_albert(std::size_t n, std::size_t m_attach, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.model = GeneratorModel::barabasi_albert;
  spec.n = n;
  spec.m_attach = m_attach;
  spec.validate();

  Rng rng(seed);
  GraphBuilder b;
  b.add_nodes(n);
  // Each node appears once per incident edge, so a uniform draw from this
  // list picks a node with probability proportional to its degree.
  std::vector<NodeIndex> endpoints;
  endpoints.reserve(2 * (m_attach * (m_attach + 1) / 2 + m_attach * n));
  for (NodeIndex i = 0; i <= m_attach; ++i)
    for (NodeIndex j = i + 1; j <= m_attach; ++j) {
      b.add_edge(i, j);
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  std::vector<NodeIndex> targets;
  for (NodeIndex v = m_attach + 1; v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m_attach) {
      const NodeIndex t = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeIndex t : targets) {
      b.add_edge(v, t);
      endpoints.push_back(v);
      endpoints.push_back(t);
    }
  }
  return std::move(b).build();
}

Graph gen_chung_lu_poisson(std::size_t n, double lambda, std::size_t k, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.model = GeneratorModel::chung_lu_poisson;
  spec.n = n;
  spec.k = k;
  spec.lambda = lambda;
  spec.validate();

  Rng rng(seed);
  std::vector<double> target(n);
  double total = 0.0;
  for (auto& d : target) {
    d = static_cast<double>(zero_truncated_poisson(lambda, rng));
    total += d;
  }
  GraphBuilder b;
  b.add_nodes(n);
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j)
      if ((k == 1 || partite_group(i, k) != partite_group(j, k)) &&
          uniform01(rng) < chung_lu_probability(target[i], target[j], total))
        b.add_edge(i, j);
  return std::move(b).build();
}

Graph generate(const GeneratorSpec& spec) {
  spec.validate();
  switch (spec.model) {
    case GeneratorModel::er_kpartite:
      return gen_er_kpartite(spec.n, spec.k, spec.p_er, spec.seed);
    case GeneratorModel::barabasi_albert:
      return gen_barabasi_albert(spec.n, spec.m_attach, spec.seed);
    case GeneratorModel::chung_lu_poisson:
      return gen_chung_lu_poisson(spec.n, spec.lambda, spec.k, spec.seed);
  }
  throw ParameterError("unknown generator model");
}

GeneratorModel parse_generator_model(const std::string& name) {
  if (name == "er_kpartite" || name == "er") return GeneratorModel::er_kpartite;
  if (name == "barabasi_albert" || name == "ba") return GeneratorModel::barabasi_albert;
  if (name == "chung_lu_poisson" || name == "chung_lu") return GeneratorModel::chung_lu_poisson;
  throw ParameterError("unknown generator model '" + name + "'");
}

const char* to_string(GeneratorModel model) {
  switch (model) {
    case GeneratorModel::er_kpartite: return "er_kpartite";
    case GeneratorModel::barabasi_albert: return "barabasi_albert";
    case GeneratorModel::chung_lu_poisson: return "chung_lu_poisson";
  }
  return "?";
}

}  // namespace dmc
