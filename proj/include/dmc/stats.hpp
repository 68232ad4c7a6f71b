#pragma once

#include <span>
#include <vector>

namespace dmc {

double mean(std::span<const double> xs);
/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double stdev(std::span<const double> xs);
/// Ranks starting at 1, ties receive their average rank.
std::vector<double> average_ranks(std::span<const double> xs);
/// Spearman rank correlation (Pearson correlation of average ranks). NaN when
/// either side is constant.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace dmc
