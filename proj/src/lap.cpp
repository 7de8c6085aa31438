#include "apcycles/lap.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace apc {

namespace {

void check_bijection(int n, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("assignment: sigma size does not match matrix dimension");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int x : sigma) {
        if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
            throw std::invalid_argument("assignment: sigma is not a bijection");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

}  // namespace

double assignment_cost(const DistanceMatrix& m, const std::vector<int>& sigma) {
    check_bijection(m.n, sigma);
    double cost = 0.0;
    for (int i = 0; i < m.n; ++i) cost += m.at(i, sigma[i]);
    return cost;
}

Assignment solve_lap(const DistanceMatrix& m) {
    const int n = m.n;
    if (n < 2) throw std::invalid_argument("solve_lap: n must be >= 2");
    const ShiftedMatrix shifted = shift_nonnegative(m);
    const DistanceMatrix& c = shifted.matrix;

    constexpr double kInf = std::numeric_limits<double>::infinity();
    // Column n is the virtual root the current row hangs off while its
    // augmenting path is grown.
    std::vector<double> row_pot(static_cast<std::size_t>(n), 0.0);
    std::vector<double> col_pot(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> match_row(static_cast<std::size_t>(n) + 1, -1);
    std::vector<int> prev_col(static_cast<std::size_t>(n), 0);
    std::vector<double> min_reduced(static_cast<std::size_t>(n));
    std::vector<char> in_tree(static_cast<std::size_t>(n) + 1);

    for (int row = 0; row < n; ++row) {
        match_row[static_cast<std::size_t>(n)] = row;
        int cur = n;
        std::fill(min_reduced.begin(), min_reduced.end(), kInf);
        std::fill(in_tree.begin(), in_tree.end(), 0);
        do {
            in_tree[static_cast<std::size_t>(cur)] = 1;
            const int tree_row = match_row[static_cast<std::size_t>(cur)];
            double delta = kInf;
            int next = -1;
            for (int j = 0; j < n; ++j) {
                if (in_tree[static_cast<std::size_t>(j)]) continue;
                const double reduced = c.at(tree_row, j) - row_pot[tree_row] - col_pot[j];
                if (reduced < min_reduced[static_cast<std::size_t>(j)]) {
                    min_reduced[static_cast<std::size_t>(j)] = reduced;
                    prev_col[static_cast<std::size_t>(j)] = cur;
                }
                if (min_reduced[static_cast<std::size_t>(j)] < delta) {
                    delta = min_reduced[static_cast<std::size_t>(j)];
                    next = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (in_tree[static_cast<std::size_t>(j)]) {
                    row_pot[match_row[static_cast<std::size_t>(j)]] += delta;
                    col_pot[static_cast<std::size_t>(j)] -= delta;
                } else if (j < n) {
                    min_reduced[static_cast<std::size_t>(j)] -= delta;
                }
            }
            cur = next;
        } while (match_row[static_cast<std::size_t>(cur)] != -1);
        while (cur != n) {
            const int back = prev_col[static_cast<std::size_t>(cur)];
            match_row[static_cast<std::size_t>(cur)] = match_row[static_cast<std::size_t>(back)];
            cur = back;
        }
    }

    Assignment out;
    out.n = n;
    out.sigma.assign(static_cast<std::size_t>(n), -1);
    for (int j = 0; j < n; ++j) out.sigma[match_row[static_cast<std::size_t>(j)]] = j;
    out.cost = assignment_cost(m, out.sigma);
    return out;
}

Assignment brute_force_lap(const DistanceMatrix& m) {
    const int n = m.n;
    if (n < 2) throw std::invalid_argument("brute_force_lap: n must be >= 2");
    if (n > 9) throw std::invalid_argument("brute_force_lap: n > 9 is not enumerable here");

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    Assignment best;
    best.n = n;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        if (m.diagonal_excluded) {
            bool fixed_point = false;
            for (int i = 0; i < n; ++i)
                if (perm[static_cast<std::size_t>(i)] == i) {
                    fixed_point = true;
                    break;
                }
            if (fixed_point) continue;
        }
        double cost = 0.0;
        for (int i = 0; i < n; ++i) cost += m.at(i, perm[static_cast<std::size_t>(i)]);
        // Strict <: lexicographic enumeration order makes the first optimum
        // the lexicographically smallest one.
        if (cost < best_cost) {
            best_cost = cost;
            best.sigma = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    best.cost = best_cost;
    return best;
}

}  // namespace apc
