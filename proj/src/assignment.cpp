#include "dmc/assignment.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <tuple>

namespace dmc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_square_finite(const CostMatrix& cost) {
  if (cost.rows() != cost.cols())
    throw ParameterError("assignment: cost matrix must be square");
  if (!cost.allFinite()) throw ParameterError("assignment: cost matrix has non-finite entries");
}

}  // namespace

double assignment_cost(const CostMatrix& cost, const std::vector<Eigen::Index>& mapping) {
  double total = 0.0;
  for (std::size_t i = 0; i < mapping.size(); ++i)
    total += cost(static_cast<Eigen::Index>(i), mapping[i]);
  return total;
}

// Shortest augmenting path solver (Jonker-Volgenant style, as laid out by
// Crouse for rectangular LSAP). Rows are inserted one at a time; each insertion
// runs Dijkstra over reduced costs u/v until it reaches a free column.
Assignment solve_assignment(const CostMatrix& cost) {
  check_square_finite(cost);
  const Eigen::Index n = cost.rows();
  const auto nz = static_cast<std::size_t>(n);

  std::vector<double> u(nz, 0.0), v(nz, 0.0), shortest(nz);
  std::vector<Eigen::Index> path(nz, -1), col4row(nz, -1), row4col(nz, -1), remaining(nz);
  std::vector<char> scanned_row(nz), scanned_col(nz);

  for (Eigen::Index cur = 0; cur < n; ++cur) {
    double min_val = 0.0;
    Eigen::Index i = cur;
    std::size_t num_remaining = nz;
    for (std::size_t it = 0; it < nz; ++it) remaining[it] = static_cast<Eigen::Index>(it);
    std::fill(scanned_row.begin(), scanned_row.end(), 0);
    std::fill(scanned_col.begin(), scanned_col.end(), 0);
    std::fill(shortest.begin(), shortest.end(), kInf);

    Eigen::Index sink = -1;
    while (sink == -1) {
      std::size_t best = nz;
      double lowest = kInf;
      scanned_row[static_cast<std::size_t>(i)] = 1;
      const double* row = cost.data() + i * n;
      const double ui = u[static_cast<std::size_t>(i)];
      for (std::size_t it = 0; it < num_remaining; ++it) {
        const auto j = static_cast<std::size_t>(remaining[it]);
        const double r = min_val + row[j] - ui - v[j];
        if (r < shortest[j]) {
          path[j] = i;
          shortest[j] = r;
        }
        bool take = shortest[j] < lowest;
        if (!take && best != nz && shortest[j] == lowest) {
          const auto bj = static_cast<std::size_t>(remaining[best]);
          const bool j_free = row4col[j] == -1;
          const bool b_free = row4col[bj] == -1;
          take = (j_free && !b_free) || (j_free == b_free && j < bj);
        }
        if (take) {
          lowest = shortest[j];
          best = it;
        }
      }
      min_val = lowest;
      if (best == nz || min_val == kInf) throw ParameterError("assignment: infeasible cost matrix");
      const Eigen::Index j = remaining[best];
      if (row4col[static_cast<std::size_t>(j)] == -1)
        sink = j;
      else
        i = row4col[static_cast<std::size_t>(j)];
      scanned_col[static_cast<std::size_t>(j)] = 1;
      remaining[best] = remaining[--num_remaining];
    }

    u[static_cast<std::size_t>(cur)] += min_val;
    for (std::size_t r = 0; r < nz; ++r)
      if (scanned_row[r] && static_cast<Eigen::Index>(r) != cur)
        u[r] += min_val - shortest[static_cast<std::size_t>(col4row[r])];
    for (std::size_t c = 0; c < nz; ++c)
      if (scanned_col[c]) v[c] -= min_val - shortest[c];

    Eigen::Index j = sink;
    while (true) {
      const Eigen::Index r = path[static_cast<std::size_t>(j)];
      row4col[static_cast<std::size_t>(j)] = r;
      std::swap(col4row[static_cast<std::size_t>(r)], j);
      if (r == cur) break;
    }
  }

  Assignment result;
  result.mapping = std::move(col4row);
  result.total_cost = assignment_cost(cost, result.mapping);
  return result;
}

Prefilter greedy_prefilter(const CostMatrix& cost, double epsilon) {
  check_square_finite(cost);
  if (!(epsilon >= 0.0)) throw ParameterError("greedy prefilter: epsilon must be >= 0");
  const Eigen::Index n = cost.rows();
  std::vector<char> col_taken(static_cast<std::size_t>(n), 0);
  std::vector<char> row_fixed(static_cast<std::size_t>(n), 0);

  // cheapest untaken column of row i, lowest index on ties
  auto cheapest = [&](Eigen::Index i) {
    double best = kInf;
    Eigen::Index arg = -1;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!col_taken[static_cast<std::size_t>(j)] && cost(i, j) < best) {
        best = cost(i, j);
        arg = j;
      }
    return std::pair{best, arg};
  };

  using Entry = std::tuple<double, Eigen::Index, Eigen::Index>;  // cost, row, col
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto [c, j] = cheapest(i);
    heap.emplace(c, i, j);
  }

  Prefilter out;
  // Cached costs are lower bounds (columns only disappear), so the first
  // fresh entry above epsilon ends the pass.
  while (!heap.empty()) {
    const auto [c, i, j] = heap.top();
    heap.pop();
    if (col_taken[static_cast<std::size_t>(j)]) {
      const auto [c2, j2] = cheapest(i);
      if (j2 >= 0) heap.emplace(c2, i, j2);
      continue;
    }
    if (c > epsilon) break;
    col_taken[static_cast<std::size_t>(j)] = 1;
    row_fixed[static_cast<std::size_t>(i)] = 1;
    out.fixed_pairs.emplace_back(i, j);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!row_fixed[static_cast<std::size_t>(i)]) out.residual_rows.push_back(i);
    if (!col_taken[static_cast<std::size_t>(i)]) out.residual_cols.push_back(i);
  }
  return out;
}

Assignment greedy_hungarian(const CostMatrix& cost, double epsilon) {
  Prefilter pf = greedy_prefilter(cost, epsilon);
  std::vector<Eigen::Index> mapping(static_cast<std::size_t>(cost.rows()), -1);
  for (const auto& [i, j] : pf.fixed_pairs) mapping[static_cast<std::size_t>(i)] = j;
  if (!pf.residual_rows.empty()) {
    const CostMatrix sub = cost(pf.residual_rows, pf.residual_cols);
    const Assignment inner = solve_assignment(sub);
    for (std::size_t k = 0; k < pf.residual_rows.size(); ++k)
      mapping[static_cast<std::size_t>(pf.residual_rows[k])] =
          pf.residual_cols[static_cast<std::size_t>(inner.mapping[k])];
  }
  Assignment result;
  result.total_cost = assignment_cost(cost, mapping);
  result.mapping = std::move(mapping);
  result.fixed_pairs = std::move(pf.fixed_pairs);
  return result;
}

}  // namespace dmc
