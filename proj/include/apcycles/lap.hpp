#pragma once

#include <vector>

#include "apcycles/ensemble.hpp"

namespace apc {

// Optimal (or candidate) assignment: sigma[i] is the column matched to row i.
// cost is always reported against the original, unshifted matrix.
struct Assignment {
    int n = 0;
    std::vector<int> sigma;
    double cost = 0.0;
};

// Exact O(n^3) solver: shortest augmenting paths with dual variables on the
// shifted nonnegative matrix. Deterministic; ties resolve to the lowest index.
Assignment solve_lap(const DistanceMatrix& m);

// Factorial validation oracle, n <= 9. Enumerates permutations in
// lexicographic order (skipping fixed points when the diagonal is excluded);
// cost ties keep the lexicographically smallest sigma.
Assignment brute_force_lap(const DistanceMatrix& m);

// Sum of d[i][sigma[i]] over the original entries. Throws if sigma is not a
// bijection of size n.
double assignment_cost(const DistanceMatrix& m, const std::vector<int>& sigma);

}  // namespace apc
