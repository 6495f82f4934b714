#ifndef RECURNLP_STATS_HPP
#define RECURNLP_STATS_HPP

#include <span>
#include <string>
#include <vector>

namespace recurnlp {

double mean(std::span<const double> xs);

// Population variance (divide by n).
double variance_population(std::span<const double> xs);

// Pearson correlation; throws UndefinedInputError when either side has
// zero variance or fewer than 2 observations.
double pearson(std::span<const double> xs, std::span<const double> ys);

// R^2 of the one-way group-mean fit: 1 - SS_resid / SS_total with
// fitted values equal to each observation's group mean (identical to
// dummy-coded OLS with intercept). Requires >= 2 groups and >= 2
// observations; throws UndefinedInputError when total variance is zero.
double ols_r2(std::span<const double> y, std::span<const std::string> groups);

// Z-scores each column in place (population convention); constant
// columns become all-zero. Rows must be rectangular.
void zscore_columns(std::vector<std::vector<double>>& rows);

} // namespace recurnlp

#endif
