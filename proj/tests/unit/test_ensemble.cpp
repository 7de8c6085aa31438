#include <cmath>
#include <sstream>

#include "doctest.h"

#include "apcycles/ensemble.hpp"
#include "apcycles/lap.hpp"
#include "apcycles/rng.hpp"

using namespace apc;

namespace {

EnsembleParams uniform_params(int n, double lambda, std::uint64_t seed,
                              bool allow_one_cycles = false) {
    return EnsembleParams{n, lambda, Distribution::Uniform01, allow_one_cycles, seed};
}

}  // namespace

TEST_SUITE("ensemble") {

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(uniform_params(1, 0.0, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(uniform_params(5, 1.5, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(uniform_params(5, -1.0001, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(
        (EnsembleParams{5, 0.5, Distribution::Exponential1, false, 1}).validate(),
        std::invalid_argument);
    CHECK_NOTHROW((EnsembleParams{5, 0.0, Distribution::Exponential1, false, 1}).validate());
    CHECK_THROWS_AS(generate_matrix(uniform_params(4, 0.0, 1), -1), std::invalid_argument);
}

TEST_CASE("regeneration is bit-for-bit identical") {
    const EnsembleParams p = uniform_params(12, 0.3, 99);
    const DistanceMatrix a = generate_matrix(p, 7);
    const DistanceMatrix b = generate_matrix(p, 7);
    CHECK(a.entries == b.entries);
    const DistanceMatrix c = generate_matrix(p, 8);
    CHECK(a.entries != c.entries);
}

TEST_CASE("lambda identities hold exactly") {
    for (int trial = 0; trial < 20; ++trial) {
        const DistanceMatrix sym = generate_matrix(uniform_params(9, 1.0, 5), trial);
        const DistanceMatrix anti = generate_matrix(uniform_params(9, -1.0, 5), trial);
        for (int i = 0; i < 9; ++i)
            for (int j = 0; j < 9; ++j) {
                if (i == j) continue;
                CHECK(sym.at(i, j) == sym.at(j, i));
                CHECK(anti.at(i, j) == -anti.at(j, i));
            }
    }
}

TEST_CASE("lambda = 0 entries are raw uniforms with mean near 1/2") {
    double sum = 0.0;
    long count = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const DistanceMatrix m = generate_matrix(uniform_params(30, 0.0, 11), trial);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j)
                if (i != j) {
                    CHECK(m.at(i, j) >= 0.0);
                    CHECK(m.at(i, j) < 1.0);
                    sum += m.at(i, j);
                    ++count;
                }
    }
    CHECK(std::abs(sum / static_cast<double>(count) - 0.5) < 0.01);
}

TEST_CASE("off-diagonal entries stay in [-1, 2] for every lambda") {
    for (double lambda : {-1.0, -0.4, 0.7, 1.0})
        for (int trial = 0; trial < 10; ++trial) {
            const DistanceMatrix m = generate_matrix(uniform_params(15, lambda, 3), trial);
            for (int i = 0; i < m.n; ++i)
                for (int j = 0; j < m.n; ++j) {
                    if (i == j) continue;
                    CHECK(m.at(i, j) >= -1.0);
                    CHECK(m.at(i, j) <= 2.0);
                }
        }
}

TEST_CASE("diagonal handling") {
    const DistanceMatrix excluded = generate_matrix(uniform_params(6, 0.5, 2), 0);
    CHECK(excluded.diagonal_excluded);
    for (int i = 0; i < 6; ++i) CHECK(excluded.at(i, i) == diagonal_sentinel(6));

    // With 1-cycles allowed the diagonal is (1 + lambda) * R_ii.
    const DistanceMatrix open = generate_matrix(uniform_params(6, 1.0, 2, true), 0);
    CHECK_FALSE(open.diagonal_excluded);
    for (int i = 0; i < 6; ++i) {
        CHECK(open.at(i, i) >= 0.0);
        CHECK(open.at(i, i) < 2.0);
    }
}

TEST_CASE("exponential entries are nonnegative and unbounded-ish") {
    EnsembleParams p{8, 0.0, Distribution::Exponential1, true, 17};
    double max_seen = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const DistanceMatrix m = generate_matrix(p, trial);
        for (double x : m.entries) {
            CHECK(x >= 0.0);
            CHECK(std::isfinite(x));
            max_seen = std::max(max_seen, x);
        }
    }
    CHECK(max_seen > 4.0);  // Exp(1) exceeds 4 with prob ~1.8% per draw
}

TEST_CASE("shift_nonnegative definition cases") {
    DistanceMatrix m;
    m.n = 2;
    m.diagonal_excluded = true;
    m.entries = {diagonal_sentinel(2), -0.7, 0.3, diagonal_sentinel(2)};
    const ShiftedMatrix sh = shift_nonnegative(m);
    CHECK(sh.shift == doctest::Approx(0.7));
    CHECK(sh.matrix.at(0, 1) == doctest::Approx(0.0));
    CHECK(sh.matrix.at(1, 0) == doctest::Approx(1.0));
    CHECK(sh.matrix.at(0, 0) == diagonal_sentinel(2));  // sentinel untouched

    m.entries = {diagonal_sentinel(2), 0.4, 0.3, diagonal_sentinel(2)};
    const ShiftedMatrix noop = shift_nonnegative(m);
    CHECK(noop.shift == 0.0);
    CHECK(noop.matrix.entries == m.entries);
}

TEST_CASE("shift preserves the brute-force argmin") {
    SplitMix64 mix(31);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(mix.next() % 5);
        const double lambda = -1.0 + 0.125 * static_cast<double>(mix.next() % 17);
        const DistanceMatrix m = generate_matrix(uniform_params(n, lambda, 43), rep);
        const ShiftedMatrix sh = shift_nonnegative(m);
        CHECK(brute_force_lap(m).sigma == brute_force_lap(sh.matrix).sigma);
    }
}

TEST_CASE("matrix dump round-trips bit-exactly") {
    const DistanceMatrix m = generate_matrix(uniform_params(7, -0.3, 123), 4);
    std::istringstream in(write_matrix(m));
    const DistanceMatrix back = read_matrix(in);
    CHECK(back.n == m.n);
    CHECK(back.diagonal_excluded);
    CHECK(back.entries == m.entries);
}

TEST_CASE("malformed matrix files are rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_matrix(empty), std::invalid_argument);
    std::istringstream bad_dim("1\n0.5\n");
    CHECK_THROWS_AS(read_matrix(bad_dim), std::invalid_argument);
    std::istringstream truncated("3\n13 1 9\n9 13\n");
    CHECK_THROWS_AS(read_matrix(truncated), std::invalid_argument);
    std::istringstream garbage("2\n13 x\n1 13\n");
    CHECK_THROWS_AS(read_matrix(garbage), std::invalid_argument);
}

TEST_CASE("trial streams are statistically independent") {
    const int trials = 10000;
    const EnsembleParams p = uniform_params(4, 0.0, 2024);
    std::vector<double> entry(static_cast<std::size_t>(trials));
    for (int t = 0; t < trials; ++t) entry[static_cast<std::size_t>(t)] =
        generate_matrix(p, t).at(0, 1);

    double mean = 0.0;
    for (double x : entry) mean += x;
    mean /= trials;
    double num = 0.0, den = 0.0;
    for (int t = 0; t + 1 < trials; ++t) {
        num += (entry[static_cast<std::size_t>(t)] - mean) *
               (entry[static_cast<std::size_t>(t + 1)] - mean);
    }
    for (double x : entry) den += (x - mean) * (x - mean);
    const double lag1_corr = num / den;
    CHECK(std::abs(lag1_corr) < 3.0 / std::sqrt(static_cast<double>(trials)));
}

}  // TEST_SUITE
