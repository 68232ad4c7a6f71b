#include <cmath>

#include <gtest/gtest.h>

#include "dmc/generators.hpp"
#include "test_support.hpp"

namespace dmc {
namespace {

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return true;
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<NodeIndex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeIndex v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v))
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++count;
        stack.push_back(nb.node);
      }
  }
  return count == g.num_nodes();
}

TEST(ErKPartite, SinglePartIsEmpty) {
  EXPECT_EQ(gen_er_kpartite(20, 1, 1.0, 0).num_edges(), 0u);
}

TEST(ErKPartite, AllSingletonPartsWithCertainEdgesIsComplete) {
  const Graph g = gen_er_kpartite(12, 12, 1.0, 0);
  EXPECT_EQ(g.num_edges(), 12u * 11u / 2u);
}

TEST(ErKPartite, BinomialEdgeCount) {
  const double expected = 1250.0, sigma = std::sqrt(2500.0 * 0.25);
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const double e = static_cast<double>(gen_er_kpartite(100, 2, 0.5, seed).num_edges());
    EXPECT_LE(std::abs(e - expected), 4.0 * sigma);
    total += e;
  }
  EXPECT_NEAR(total / 50.0, expected, 3.0 * sigma / std::sqrt(50.0));
}

TEST(ErKPartite, NoWithinGroupEdges) {
  for (std::size_t k : {2u, 3u, 5u, 7u}) {
    const Graph g = gen_er_kpartite(50, k, 0.7, k);
    for (NodeIndex u = 0; u < g.num_nodes(); ++u)
      for (const auto& nb : g.neighbors(u))
        EXPECT_NE(partite_group(u, k), partite_group(nb.node, k));
  }
}

TEST(ErKPartite, Parameters) {
  EXPECT_THROW(gen_er_kpartite(5, 6, 0.5, 0), ParameterError);
  EXPECT_THROW(gen_er_kpartite(5, 0, 0.5, 0), ParameterError);
  EXPECT_THROW(gen_er_kpartite(5, 2, 1.5, 0), ParameterError);
}

TEST(BarabasiAlbert, SeedCliqueOnly) {
  const Graph g = gen_barabasi_albert(6, 5, 1);
  EXPECT_EQ(g.num_edges(), 15u);
  for (NodeIndex i = 0; i < 6; ++i) EXPECT_EQ(g.degree(i), 5u);
}

TEST(BarabasiAlbert, EdgeCountByConstruction) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gen_barabasi_albert(1000, 5, seed);
    EXPECT_EQ(g.num_edges(), 4985u);
    EXPECT_TRUE(is_connected(g));
    for (NodeIndex v = 0; v < g.num_nodes(); ++v) EXPECT_GE(g.degree(v), 5u);
  }
}

TEST(BarabasiAlbert, MoreHeterogeneousThanMatchedEr) {
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph ba = gen_barabasi_albert(1000, 5, seed);
    const double mean_degree = degree_stats(ba).mean;
    const Graph er = gen_er_kpartite(1000, 1000, mean_degree / 999.0, seed + 1000);
    wins += degree_stats(ba).variance > degree_stats(er).variance;
  }
  EXPECT_EQ(wins, 20);
}

TEST(BarabasiAlbert, Parameters) {
  EXPECT_THROW(gen_barabasi_albert(5, 5, 0), ParameterError);
  EXPECT_THROW(gen_barabasi_albert(5, 0, 0), ParameterError);
}

TEST(ChungLu, ProbabilityClamp) {
  EXPECT_DOUBLE_EQ(chung_lu_probability(1.0, 1.0, 2.0), 0.5);
  EXPECT_DOUBLE_EQ(chung_lu_probability(30.0, 40.0, 100.0), 1.0);
}

TEST(ChungLu, TwoUnitTargetNodes) {
  // lambda -> 0 forces both truncated targets to 1, so p = 1 * 1 / 2
  int edges = 0;
  const int runs = 4000;
  for (int seed = 0; seed < runs; ++seed)
    edges += static_cast<int>(gen_chung_lu_poisson(2, 1e-9, 1, static_cast<std::uint64_t>(seed)).num_edges());
  const double freq = static_cast<double>(edges) / runs;
  EXPECT_NEAR(freq, 0.5, 3.0 * std::sqrt(0.25 / runs));
}

TEST(ChungLu, RealizedMeanDegree) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const double mean = degree_stats(gen_chung_lu_poisson(2000, 10.0, 1, seed)).mean;
    EXPECT_NEAR(mean, 10.0, 1.0);
  }
}

TEST(ChungLu, SmallLambdaLessSpread) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto low = degree_stats(gen_chung_lu_poisson(1000, 1.0, 1, seed));
    const auto high = degree_stats(gen_chung_lu_poisson(1000, 20.0, 1, seed));
    EXPECT_LT(low.variance, high.variance);
  }
}

TEST(ChungLu, PartiteRestriction) {
  const Graph g = gen_chung_lu_poisson(200, 15.0, 4, 3);
  EXPECT_GT(g.num_edges(), 0u);
  for (NodeIndex u = 0; u < g.num_nodes(); ++u)
    for (const auto& nb : g.neighbors(u)) EXPECT_NE(u % 4, nb.node % 4);
}

TEST(Generators, Reproducible) {
  GeneratorSpec spec;
  for (auto model : {GeneratorModel::er_kpartite, GeneratorModel::barabasi_albert,
                     GeneratorModel::chung_lu_poisson}) {
    spec.model = model;
    spec.n = 150;
    spec.k = 3;
    spec.p_er = 0.2;
    spec.m_attach = 3;
    spec.lambda = 6.0;
    spec.seed = 42;
    EXPECT_EQ(generate(spec), generate(spec)) << to_string(model);
    EXPECT_EQ(parse_generator_model(to_string(model)), model);
  }
  EXPECT_THROW(parse_generator_model("watts_strogatz"), ParameterError);
}

}  // namespace
}  // namespace dmc
