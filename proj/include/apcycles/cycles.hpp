#pragma once

#include <map>
#include <vector>

namespace apc {

// Cycle structure of a permutation.
struct CycleStats {
    int n = 0;
    std::map<int, int> cycle_lengths;  // length -> count, nonzero entries only
    int n_cycles = 0;
    int two_cycle_count = 0;
    bool is_n_cycle = false;
    // Longest even cycle present, 0 if none. Kept as data rather than an
    // assertion so experiments can count lambda = 1 violations (expected: 0).
    int max_even_cycle_length = 0;
};

// Standard cycle decomposition. Throws std::invalid_argument if sigma is not
// a bijection.
CycleStats decompose(const std::vector<int>& sigma);

// count(k) from the histogram; throws on k outside [1, n].
int count_k_cycles(const CycleStats& stats, int k);

}  // namespace apc
