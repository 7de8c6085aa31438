#pragma once

#include <utility>
#include <vector>

#include "apcycles/rational.hpp"

namespace apc {

// Exact harmonic number H_n = sum_{m=1..n} 1/m.
BigRational harmonic(int n);

// Mean number of cycles of a uniform random permutation of n elements whose
// cycles all have length >= r. For r = 2 this is the lambda = 0 prediction,
// for r = 3 the lambda = -1 one, and for r = 1 it equals H_n.
//
// Two independent routes that must agree exactly:
//   - expected_cycles_exact: ratio sum_k k d_r(n,k) / sum_k d_r(n,k) from the
//     recurrence tables;
//   - expected_cycles_series: ratio of the n-th coefficients of
//     (log(1-x)+p(x)) exp(-p(x))/(1-x) and exp(-p(x))/(1-x), sign flipped,
//     with p = 0, x, x + x^2/2 for r = 1, 2, 3.
BigRational expected_cycles_exact(int r, int n);
BigRational expected_cycles_series(int r, int n);

// All values n = r .. n_max in one pass (same result as the per-n calls).
std::vector<BigRational> expected_cycles_exact_all(int r, int n_max);
std::vector<BigRational> expected_cycles_series_all(int r, int n_max);

enum class Regime { LambdaZero, LambdaMinusOne };

// Large-n expansion H_n - 1 + sum_{i=1..11} C_i n^-i (LambdaZero) or
// H_n - 3/2 + sum C'_i n^-i (LambdaMinusOne). Requires n >= 12.
double expected_cycles_asymptotic(Regime regime, int n);
// Same quantity as an exact rational (n capped like the other exact routes);
// used where differences fall below double precision.
BigRational expected_cycles_asymptotic_exact(Regime regime, int n);

enum class PnRegime { LambdaNegative, LambdaZero };

// Probability that the optimum is a single n-cycle: e^{3/2}/n for lambda < 0,
// e/n for lambda = 0. Requires n >= 3.
double p_n_cycle_theory(PnRegime regime, int n);

// Mean optimal assignment length for i.i.d. Exp(1) entries: sum_{m=1..n} 1/m^2.
double parisi_length(int n);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares fit of y against x. Requires >= 3 points with at
// least two distinct x values.
LinearFit fit_linear(const std::vector<std::pair<double, double>>& points);

}  // namespace apc
