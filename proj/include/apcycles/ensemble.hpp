#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace apc {

enum class Distribution { Uniform01, Exponential1 };

// Parameters of the correlated random-matrix ensemble
// d_ij = R_ij + lambda * R_ji (i != j), diagonal excluded unless 1-cycles are
// allowed, in which case d_ii = (1 + lambda) * R_ii.
struct EnsembleParams {
    int n = 0;
    double lambda = 0.0;
    Distribution distribution = Distribution::Uniform01;
    bool allow_one_cycles = false;
    std::uint64_t master_seed = 0;

    // Throws std::invalid_argument on violation: n >= 2, |lambda| <= 1, and
    // Exponential1 only at lambda = 0.
    void validate() const;
};

// Diagonal sentinel standing in for +infinity: any derangement on uniform
// entries costs at most 3n after shifting, so 4n + 1 can never enter an
// optimum while staying finite for the solver.
double diagonal_sentinel(int n);

// Dense instance of the ensemble, reproducible from (params, trial_index).
struct DistanceMatrix {
    int n = 0;
    std::vector<double> entries;  // row-major n*n
    bool diagonal_excluded = true;
    EnsembleParams params;
    int trial_index = 0;

    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
    double sentinel() const { return diagonal_sentinel(n); }
};

// Deterministic generation: the random stream is derived from
// (master_seed, n, lambda, trial_index) only, so calls are pure and safe to
// issue from any thread in any order.
DistanceMatrix generate_matrix(const EnsembleParams& params, int trial_index);

struct ShiftedMatrix {
    DistanceMatrix matrix;
    double shift = 0.0;
};

// Adds c = max(0, -min off-diagonal entry) to every off-diagonal entry.
// All permutation costs move by n*c, so the argmin is preserved.
ShiftedMatrix shift_nonnegative(const DistanceMatrix& m);

// Plain-text dump: first line "N", then N rows of N space-separated values,
// diagonal written as the sentinel. Round-trips bit-exactly.
std::string write_matrix(const DistanceMatrix& m);
DistanceMatrix read_matrix(std::istream& in);

}  // namespace apc
