#include "apcycles/ensemble.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <stdexcept>

#include "apcycles/rng.hpp"

namespace apc {

namespace {
constexpr int kMaxInstanceN = 10000;
}

void EnsembleParams::validate() const {
    if (n < 2) throw std::invalid_argument("EnsembleParams: n must be >= 2");
    if (n > kMaxInstanceN) throw std::invalid_argument("EnsembleParams: n is too large");
    if (!(lambda >= -1.0 && lambda <= 1.0))
        throw std::invalid_argument("EnsembleParams: lambda must lie in [-1, 1]");
    if (distribution == Distribution::Exponential1 && lambda != 0.0)
        throw std::invalid_argument(
            "EnsembleParams: Exponential1 entries are only defined at lambda = 0");
}

double diagonal_sentinel(int n) { return 4.0 * n + 1.0; }

DistanceMatrix generate_matrix(const EnsembleParams& params, int trial_index) {
    params.validate();
    if (trial_index < 0) throw std::invalid_argument("generate_matrix: trial_index must be >= 0");

    const int n = params.n;
    Xoshiro256ss rng(derive_trial_seed(params.master_seed, static_cast<std::uint32_t>(n),
                                       lambda_seed_key(params.lambda),
                                       static_cast<std::uint64_t>(trial_index)));

    // Draw the full R table first; d_ij needs both R_ij and R_ji.
    std::vector<double> r(static_cast<std::size_t>(n) * n);
    for (double& x : r)
        x = params.distribution == Distribution::Uniform01 ? rng.uniform01() : rng.exponential1();

    DistanceMatrix m;
    m.n = n;
    m.params = params;
    m.trial_index = trial_index;
    m.diagonal_excluded = !params.allow_one_cycles;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    const double lambda = params.lambda;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            m.at(i, j) = r[static_cast<std::size_t>(i) * n + j] +
                         lambda * r[static_cast<std::size_t>(j) * n + i];
        }
    }
    const double diag = diagonal_sentinel(n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = params.allow_one_cycles
                         ? (1.0 + lambda) * r[static_cast<std::size_t>(i) * n + i]
                         : diag;
    return m;
}

ShiftedMatrix shift_nonnegative(const DistanceMatrix& m) {
    double min_entry = 0.0;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (m.diagonal_excluded && i == j) continue;
            min_entry = std::min(min_entry, m.at(i, j));
        }
    const double shift = -min_entry;  // max(0, -min) since min_entry starts at 0

    ShiftedMatrix out{m, shift};
    if (shift > 0.0) {
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                if (m.diagonal_excluded && i == j) continue;
                out.matrix.at(i, j) += shift;
            }
    }
    return out;
}

std::string write_matrix(const DistanceMatrix& m) {
    std::string out = std::to_string(m.n);
    out += '\n';
    char buf[32];
    for (int i = 0; i < m.n; ++i) {
        for (int j = 0; j < m.n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(i, j));
            if (j) out += ' ';
            out += buf;
        }
        out += '\n';
    }
    return out;
}

DistanceMatrix read_matrix(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("matrix file: missing dimension line");
    if (n < 2 || n > kMaxInstanceN)
        throw std::invalid_argument("matrix file: dimension out of range");

    DistanceMatrix m;
    m.n = n;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!(in >> m.at(i, j)))
                throw std::invalid_argument("matrix file: truncated or non-numeric entry");
        }

    const double diag = diagonal_sentinel(n);
    m.diagonal_excluded = true;
    for (int i = 0; i < n; ++i)
        if (m.at(i, i) != diag) m.diagonal_excluded = false;
    m.params.n = n;
    m.params.allow_one_cycles = !m.diagonal_excluded;
    return m;
}

}  // namespace apc
