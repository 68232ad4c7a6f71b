#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "dmc/assignment.hpp"
#include "test_support.hpp"

namespace dmc {
namespace {

using testing::brute_force_min_cost;
using testing::is_permutation_of_range;

CostMatrix random_costs(Eigen::Index n, Rng& rng, bool integral) {
  CostMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      c(i, j) = integral ? std::floor(uniform01(rng) * 10.0) : uniform01(rng) * 100.0;
  return c;
}

Eigen::MatrixXd loop_cost(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd c(a.rows(), b.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.rows(); ++j) {
      double s = 0.0;
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += (a(i, k) - b(j, k)) * (a(i, k) - b(j, k));
      c(i, j) = s;
    }
  return c;
}

TEST(CostMatrix, HubVersusLeafRows) {
  for (int k : {5, 10, 50}) {
    Eigen::RowVectorXd v1 = Eigen::RowVectorXd::Zero(k), v2 = Eigen::RowVectorXd::Ones(k);
    v1(0) = k;
    EXPECT_EQ(squared_distance_cost(v1, v2)(0, 0), static_cast<double>(k * (k - 1)));
  }
  Eigen::RowVectorXd v2 = Eigen::RowVectorXd::Ones(10), v3 = Eigen::RowVectorXd::Constant(10, 1.5);
  EXPECT_DOUBLE_EQ(squared_distance_cost(v2, v3)(0, 0), 2.5);
  EXPECT_EQ(squared_distance_cost(v2, v2)(0, 0), 0.0);
}

TEST(CostMatrix, MatchesLoopOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::MatrixXd a(8, 5), b(8, 5);
    for (Eigen::Index i = 0; i < 8; ++i)
      for (Eigen::Index k = 0; k < 5; ++k) {
        a(i, k) = std::floor(uniform01(rng) * 12.0);
        b(i, k) = std::floor(uniform01(rng) * 12.0);
      }
    EXPECT_EQ(Eigen::MatrixXd(squared_distance_cost(a, b)), loop_cost(a, b));
  }
}

TEST(CostMatrix, TransposeSymmetry) {
  const Graph g1 = testing::random_graph(30, 0.2, 1, true), g2 = testing::random_graph(30, 0.2, 2, true);
  const auto [m1, m2] = build_weighted_degree_matrices(g1, g2);
  EXPECT_EQ(CostMatrix(cost_matrix(m1, m2).transpose()), cost_matrix(m2, m1));
}

TEST(CostMatrix, DimensionMismatch) {
  EXPECT_THROW(squared_distance_cost(Eigen::MatrixXd::Zero(3, 2), Eigen::MatrixXd::Zero(3, 4)),
               ParameterError);
}

TEST(Hungarian, IdentityCosts) {
  const CostMatrix c = CostMatrix::Ones(6, 6) - CostMatrix::Identity(6, 6);
  const Assignment a = hungarian(c);
  for (Eigen::Index i = 0; i < 6; ++i) EXPECT_EQ(a.mapping[static_cast<std::size_t>(i)], i);
  EXPECT_EQ(a.total_cost, 0.0);
  EXPECT_TRUE(a.fixed_pairs.empty());
}

TEST(Hungarian, WorkedExampleMapping) {
  const auto [m1, m2] = build_degree_matrices(testing::worked_f1(), testing::worked_f2());
  const CostMatrix c = cost_matrix(m1, m2);
  // squared distances between the two printed matrices, computed by hand
  CostMatrix expected(5, 5);
  expected << 29, 17, 29, 17, 26,
              11, 23, 11, 23, 2,
              1, 17, 1, 17, 12,
              1, 17, 1, 17, 12,
              1, 17, 1, 17, 12;
  EXPECT_EQ(c, expected);
  const Assignment a = hungarian(c);
  EXPECT_EQ(a.mapping, (std::vector<Eigen::Index>{1, 4, 0, 2, 3}));
  EXPECT_EQ(a.total_cost, 38.0);
  EXPECT_EQ(a.total_cost, brute_force_min_cost(c));
}

TEST(Hungarian, BruteForceOracle) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(trial % 7);
    const CostMatrix c = random_costs(n, rng, trial % 2 == 0);
    const Assignment a = hungarian(c);
    ASSERT_TRUE(is_permutation_of_range(a.mapping));
    EXPECT_EQ(a.total_cost, assignment_cost(c, a.mapping));
    if (trial % 2 == 0)
      EXPECT_EQ(a.total_cost, brute_force_min_cost(c));
    else
      EXPECT_NEAR(a.total_cost, brute_force_min_cost(c), 1e-9);
  }
}

TEST(Hungarian, ConstantShift) {
  Rng rng(77);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const CostMatrix c = random_costs(6, rng, false);
    const Assignment base = hungarian(c);
    const Assignment shifted = hungarian(CostMatrix(c.array() + 12.5));
    EXPECT_NEAR(shifted.total_cost, base.total_cost + 6 * 12.5, 1e-9);
    EXPECT_EQ(shifted.mapping, base.mapping);
    ++checked;
  }
  EXPECT_EQ(checked, 100);
}

TEST(Hungarian, Deterministic) {
  Rng rng(5);
  const CostMatrix c = random_costs(40, rng, true);
  EXPECT_EQ(hungarian(c).mapping, hungarian(c).mapping);
}

TEST(Hungarian, EmptyAndInvalid) {
  EXPECT_TRUE(hungarian(CostMatrix(0, 0)).mapping.empty());
  EXPECT_THROW(hungarian(CostMatrix::Zero(2, 3)), ParameterError);
  CostMatrix bad = CostMatrix::Zero(2, 2);
  bad(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(hungarian(bad), ParameterError);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(hungarian(bad), ParameterError);
}

TEST(Hungarian, AcceptsExpressions) {
  Eigen::MatrixXd c(2, 2);
  c << 3, 1, 1, 3;
  const Assignment a = hungarian(c * 2.0);
  EXPECT_EQ(a.mapping, (std::vector<Eigen::Index>{1, 0}));
  EXPECT_EQ(a.total_cost, 4.0);
}

TEST(GreedyPrefilter, ExactMatchSaturation) {
  Eigen::MatrixXd m(5, 3);
  m << 1, 2, 3, 2, 2, 0, 4, 0, 0, 1, 1, 1, 5, 5, 5;
  const CostMatrix c = squared_distance_cost(m, m);
  const Prefilter pf = greedy_prefilter(c, 0.0);
  EXPECT_EQ(pf.fixed_pairs.size(), 5u);
  EXPECT_TRUE(pf.residual_rows.empty());
  EXPECT_TRUE(pf.residual_cols.empty());
  for (auto [i, j] : pf.fixed_pairs) EXPECT_EQ(i, j);
}

TEST(GreedyPrefilter, NoIdenticalRows) {
  Eigen::MatrixXd a(3, 2), b(3, 2);
  a << 1, 0, 2, 0, 3, 0;
  b << 1, 1, 2, 1, 3, 1;
  const Prefilter pf = greedy_prefilter(squared_distance_cost(a, b), 0.0);
  EXPECT_TRUE(pf.fixed_pairs.empty());
  EXPECT_EQ(pf.residual_rows.size(), 3u);
  EXPECT_EQ(pf.residual_cols.size(), 3u);
}

TEST(GreedyPrefilter, HugeEpsilonIsPureGreedy) {
  Rng rng(9);
  const CostMatrix c = random_costs(30, rng, false);
  const Prefilter pf = greedy_prefilter(c, 1e12);
  EXPECT_EQ(pf.fixed_pairs.size(), 30u);
  EXPECT_TRUE(pf.residual_rows.empty());
  // each fixed pair took the cheapest column still free at its turn
  std::vector<char> taken(30, 0);
  for (auto [i, j] : pf.fixed_pairs) {
    for (Eigen::Index k = 0; k < 30; ++k)
      if (!taken[static_cast<std::size_t>(k)]) EXPECT_LE(c(i, j), c(i, k));
    taken[static_cast<std::size_t>(j)] = 1;
  }
}

TEST(GreedyPrefilter, ZeroEpsilonFixesOnlyEqualRows) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd a(12, 3), b(12, 3);
    for (Eigen::Index i = 0; i < 12; ++i)
      for (Eigen::Index k = 0; k < 3; ++k) {
        a(i, k) = std::floor(uniform01(rng) * 3.0);
        b(i, k) = std::floor(uniform01(rng) * 3.0);
      }
    const Prefilter pf = greedy_prefilter(squared_distance_cost(a, b), 0.0);
    for (auto [i, j] : pf.fixed_pairs) EXPECT_EQ(a.row(i), b.row(j));
    EXPECT_EQ(pf.fixed_pairs.size() + pf.residual_rows.size(), 12u);
  }
}

TEST(GreedyPrefilter, NegativeEpsilon) {
  EXPECT_THROW(greedy_prefilter(CostMatrix::Zero(2, 2), -1.0), ParameterError);
}

TEST(GreedyHungarian, IdenticalMatricesCostZero) {
  const Graph g = testing::random_graph(40, 0.1, 4);
  const auto [m1, m2] = build_degree_matrices(g, g);
  const Assignment a = greedy_hungarian(cost_matrix(m1, m2), 0.0);
  EXPECT_EQ(a.total_cost, 0.0);
  EXPECT_TRUE(is_permutation_of_range(a.mapping));
  for (std::size_t i = 0; i < a.mapping.size(); ++i)
    EXPECT_EQ(m1.rows.row(static_cast<Eigen::Index>(i)), m2.rows.row(a.mapping[i]));
}

TEST(GreedyHungarian, NeverBeatsExactSolver) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const CostMatrix c = random_costs(7, rng, true);
    const double best = hungarian(c).total_cost;
    for (double eps : {0.0, 1.0, 3.0, 100.0}) {
      const Assignment a = greedy_hungarian(c, eps);
      ASSERT_TRUE(is_permutation_of_range(a.mapping));
      EXPECT_GE(a.total_cost, best);
    }
  }
}

TEST(GreedyHungarian, ResidualSolvedOptimally) {
  Rng rng(8);
  Eigen::MatrixXd a(6, 3), b(6, 3);
  for (Eigen::Index i = 0; i < 6; ++i)
    for (Eigen::Index k = 0; k < 3; ++k) {
      a(i, k) = 1.0 + std::floor(uniform01(rng) * 9.0);
      b(i, k) = 10.0 + std::floor(uniform01(rng) * 9.0);  // disjoint value range
    }
  b.row(4) = a.row(2);
  const CostMatrix c = squared_distance_cost(a, b);
  const Assignment g = greedy_hungarian(c, 0.0);
  ASSERT_EQ(g.fixed_pairs.size(), 1u);
  EXPECT_EQ(g.fixed_pairs[0], (std::pair<Eigen::Index, Eigen::Index>{2, 4}));
  EXPECT_EQ(g.mapping[2], 4);
  const std::vector<Eigen::Index> rows{0, 1, 3, 4, 5}, cols{0, 1, 2, 3, 5};
  const Eigen::MatrixXd residual = c(rows, cols);
  EXPECT_EQ(g.total_cost, brute_force_min_cost(residual));
}

}  // namespace
}  // namespace dmc
