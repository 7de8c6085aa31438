#pragma once

#include <string>
#include <vector>

#include "apcycles/bigint.hpp"

namespace apc {

// Exact computations are capped here by default; past this point the
// asymptotic expansion is the intended route.
inline constexpr int kMaxExactN = 500;

// Table of associated Stirling numbers of the first kind d_r(n, k): the number
// of permutations of n elements with exactly k cycles, all of length >= r.
// r = 1 gives the unsigned Stirling numbers of the first kind, r = 2 counts
// derangements by cycle count, r = 3 additionally forbids 2-cycles.
struct StirlingTable {
    int r = 0;
    int n_max = 0;
    // values[n][k] for 0 <= k <= n <= n_max.
    std::vector<std::vector<BigInt>> values;

    const BigInt& at(int n, int k) const;
    BigInt row_sum(int n) const;
};

// Recurrence route.
StirlingTable stirling_table(int r, int n_max);

// Independent route: coefficient extraction from the exponential generating
// function exp(u * (-log(1-x) - p_r(x))), i.e. d_r(n,k) = n! [x^n] L(x)^k / k!
// with L = -log(1-x) - p_r(x). Used to cross-validate the recurrence.
StirlingTable stirling_table_egf(int r, int n_max);

// Derangement numbers via D_n = (n-1)(D_{n-1} + D_{n-2}).
BigInt derangement_number(int n);

// CSV dump with header "r,n,k,d" (one row per 0 <= k <= n <= n_max).
std::string stirling_csv(const StirlingTable& table);

}  // namespace apc
