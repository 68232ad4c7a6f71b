#include <numeric>

#include <gtest/gtest.h>

#include "dmc/degree_matrix.hpp"
#include "dmc/generators.hpp"
#include "test_support.hpp"

namespace dmc {
namespace {

using testing::make_graph;
using testing::random_graph;

RowMajorMatrix<int> rows_of(std::initializer_list<std::initializer_list<int>> rows) {
  RowMajorMatrix<int> m(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

std::vector<NodeIndex> iota_perm(std::size_t n) {
  std::vector<NodeIndex> p(n);
  std::iota(p.begin(), p.end(), NodeIndex{0});
  return p;
}

std::vector<NodeIndex> random_perm(std::size_t n, std::uint64_t seed) {
  auto p = iota_perm(n);
  Rng rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(DegreeMatrix, WorkedExampleF1F2) {
  const auto [m1, m2] = build_degree_matrices<int>(testing::worked_f1(), testing::worked_f2());
  EXPECT_EQ(m1.rows, rows_of({{4, 0, 0, 0},
                              {1, 3, 3, 3},
                              {3, 3, 4, 0},
                              {3, 3, 4, 0},
                              {3, 3, 4, 0}}));
  EXPECT_EQ(m2.rows, rows_of({{2, 3, 4, 0},
                              {3, 4, 0, 0},
                              {2, 3, 4, 0},
                              {3, 4, 0, 0},
                              {2, 2, 3, 3}}));
  EXPECT_EQ(m1.node_of_row, iota_perm(5));
}

TEST(DegreeMatrix, NeighborhoodRowWithWideMatrix) {
  // origin 0 with neighbors of degree 3, 4, 3, 5, 3 (leaves pad the degrees)
  GraphBuilder b;
  b.add_nodes(6);
  const std::size_t wanted[] = {3, 4, 3, 5, 3};
  NodeIndex next = 6;
  for (NodeIndex k = 0; k < 5; ++k) {
    b.add_edge(0, k + 1);
    for (std::size_t extra = 1; extra < wanted[k]; ++extra) {
      b.add_node(std::to_string(next));
      b.add_edge(k + 1, next++);
    }
  }
  const Graph g = std::move(b).build();
  const auto m = degree_matrix<int>(g, 10);
  EXPECT_EQ(m.rows.row(0), rows_of({{3, 3, 3, 4, 5, 0, 0, 0, 0, 0}}));
  EXPECT_THROW(degree_matrix<int>(g, 4), ParameterError);
}

TEST(DegreeMatrix, IsolatedNodeGetsZeroRow) {
  const Graph g = make_graph(3, {{0, 1}});
  const auto [m, _] = build_degree_matrices(g, g);
  EXPECT_EQ(m.cols(), 1);
  EXPECT_EQ(m.rows(2, 0), 0.0);
}

TEST(DegreeMatrix, EmptyGraphs) {
  const Graph g = make_graph(4, {});
  const auto [m1, m2] = build_degree_matrices(g, g);
  EXPECT_EQ(m1.num_rows(), 4);
  EXPECT_EQ(m1.cols(), 0);
}

TEST(DegreeMatrix, UnequalOrder) {
  EXPECT_THROW(build_degree_matrices(make_graph(3, {}), make_graph(4, {})), ParameterError);
}

TEST(DegreeMatrix, MatchesDenseAdjacencyOracle) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g1 = random_graph(25, 0.2, seed);
    const Graph g2 = random_graph(25, 0.3, seed + 1000);
    const auto [m1, m2] = build_degree_matrices(g1, g2);
    const auto width = static_cast<std::size_t>(m1.cols());
    EXPECT_EQ(width, std::max(degree_stats(g1).max_degree, degree_stats(g2).max_degree));
    const auto oracle1 = testing::dense_degree_rows(g1, width);
    const auto oracle2 = testing::dense_degree_rows(g2, width);
    for (Eigen::Index r = 0; r < m1.num_rows(); ++r) {
      for (Eigen::Index c = 0; c < m1.cols(); ++c) {
        EXPECT_EQ(m1.rows(r, c), oracle1[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        EXPECT_EQ(m2.rows(r, c), oracle2[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
      }
    }
  }
}

TEST(DegreeMatrix, PropertyRowShapeAndSums) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_barabasi_albert(120, 3, seed);
    const auto [m, _] = build_degree_matrices(g, g);
    for (Eigen::Index r = 0; r < m.num_rows(); ++r) {
      const auto v = static_cast<NodeIndex>(r);
      const Eigen::Index nonzero = (m.rows.row(r).array() != 0.0).count();
      EXPECT_EQ(static_cast<std::size_t>(nonzero), g.degree(v));
      for (Eigen::Index c = 1; c < nonzero; ++c) EXPECT_LE(m.rows(r, c - 1), m.rows(r, c));
      for (Eigen::Index c = nonzero; c < m.cols(); ++c) EXPECT_EQ(m.rows(r, c), 0.0);
      double neighbor_degree_sum = 0.0;
      for (const auto& nb : g.neighbors(v)) neighbor_degree_sum += static_cast<double>(g.degree(nb.node));
      EXPECT_EQ(m.rows.row(r).sum(), neighbor_degree_sum);
    }
  }
}

TEST(DegreeMatrix, RelabelingPermutesRowsOnly) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(30, 0.15, seed);
    const auto shuffled = relabel_shuffle(g, seed + 7);
    const auto [ref, _a] = build_degree_matrices(g, g);
    const auto [moved, _b] = build_degree_matrices(shuffled.graph, g);
    EXPECT_TRUE(row_equivalent(ref, moved));
    // row of node v lands at its new index
    for (NodeIndex v = 0; v < g.num_nodes(); ++v)
      EXPECT_EQ(moved.rows.row(static_cast<Eigen::Index>(shuffled.permutation[v])),
                ref.rows.row(static_cast<Eigen::Index>(v)));
  }
}

TEST(WeightedDegreeMatrix, UnitWeightsReduceToPlain) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g1 = random_graph(40, 0.1, seed), g2 = random_graph(40, 0.12, seed + 50);
    const auto plain = build_degree_matrices(g1, g2);
    const auto weighted = build_weighted_degree_matrices(with_unit_weights(g1), with_unit_weights(g2));
    EXPECT_EQ(plain.first, weighted.first);
    EXPECT_EQ(plain.second, weighted.second);
  }
}

TEST(WeightedDegreeMatrix, PathWithWeights) {
  // a - b - c with w(a,b) = 2, w(b,c) = 0.5
  const Graph g = make_graph(3, {{0, 1}, {1, 2}}, true, {2.0, 0.5});
  const auto [m, _] = build_weighted_degree_matrices(g, g);
  EXPECT_EQ(m.cols(), 2);
  EXPECT_EQ(m.rows(1, 0), 0.5);
  EXPECT_EQ(m.rows(1, 1), 2.0);
  EXPECT_EQ(m.rows(0, 0), 4.0);  // deg(b) * 2
  EXPECT_EQ(m.rows(2, 0), 1.0);  // deg(b) * 0.5
}

TEST(WeightedDegreeMatrix, SingleEdge) {
  const Graph g = make_graph(2, {{0, 1}}, true, {3.0});
  const auto [m, _] = build_weighted_degree_matrices(g, g);
  EXPECT_EQ(m.rows(0, 0), 3.0);
  EXPECT_EQ(m.rows(1, 0), 3.0);
}

TEST(WeightedDegreeMatrix, RequiresWeightedGraphs) {
  const Graph g = make_graph(2, {{0, 1}});
  EXPECT_THROW(build_weighted_degree_matrices(g, g), ParameterError);
}

TEST(PermuteRows, EquivalenceRelationLaws) {
  const auto [m, _] = build_degree_matrices(random_graph(20, 0.25, 5), random_graph(20, 0.25, 6));
  EXPECT_EQ(permute_rows(m, iota_perm(20)), m);

  const auto p = random_perm(20, 1);
  std::vector<NodeIndex> inverse(20);
  for (NodeIndex i = 0; i < 20; ++i) inverse[p[i]] = i;
  EXPECT_EQ(permute_rows(permute_rows(m, p), inverse), m);

  const auto q = random_perm(20, 2);
  std::vector<NodeIndex> composed(20);
  for (NodeIndex r = 0; r < 20; ++r) composed[r] = p[q[r]];
  EXPECT_EQ(permute_rows(permute_rows(m, p), q), permute_rows(m, composed));
  EXPECT_TRUE(row_equivalent(m, permute_rows(m, composed)));
}

TEST(PermuteRows, InvalidPermutation) {
  const auto [m, _] = build_degree_matrices(random_graph(4, 0.5, 1), random_graph(4, 0.5, 2));
  EXPECT_THROW(permute_rows(m, std::vector<NodeIndex>{0, 1, 1, 3}), ParameterError);
  EXPECT_THROW(permute_rows(m, std::vector<NodeIndex>{0, 1, 2}), ParameterError);
  EXPECT_THROW(permute_rows(m, std::vector<NodeIndex>{0, 1, 2, 4}), ParameterError);
}

}  // namespace
}  // namespace dmc
