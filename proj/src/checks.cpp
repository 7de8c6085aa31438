#include "apcycles/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "apcycles/analytic.hpp"
#include "apcycles/cycles.hpp"
#include "apcycles/experiment.hpp"
#include "apcycles/rng.hpp"
#include "apcycles/series.hpp"
#include "apcycles/stirling.hpp"

namespace apc::checks {

namespace {

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

CheckResult result(std::string name, bool passed, std::string detail) {
    return CheckResult{std::move(name), passed, std::move(detail)};
}

EnsembleParams uniform_params(int n, double lambda, std::uint64_t seed) {
    return EnsembleParams{n, lambda, Distribution::Uniform01, false, seed};
}

}  // namespace

std::vector<long long> permutation_cycle_census(int r, int n) {
    std::vector<long long> census(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n));
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        int min_len = n + 1;
        for (int start = 0; start < n; ++start) {
            if (seen[static_cast<std::size_t>(start)]) continue;
            int len = 0, cur = start;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                cur = perm[static_cast<std::size_t>(cur)];
                ++len;
            } while (cur != start);
            ++cycles;
            min_len = std::min(min_len, len);
        }
        if (min_len >= r) ++census[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return census;
}

namespace {

CheckResult check_ensemble_identities() {
    SplitMix64 mix(kVerifySeed);
    // Exact symmetry / antisymmetry and bitwise determinism.
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 3 + static_cast<int>(mix.next() % 30);
        for (double lambda : {1.0, -1.0}) {
            EnsembleParams p = uniform_params(n, lambda, kVerifySeed + rep);
            DistanceMatrix m = generate_matrix(p, rep);
            DistanceMatrix again = generate_matrix(p, rep);
            if (m.entries != again.entries)
                return result("ensemble-identities", false, "regeneration not bit-identical");
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const double want = lambda > 0 ? m.at(j, i) : -m.at(j, i);
                    if (m.at(i, j) != want)
                        return result("ensemble-identities", false,
                                      fmt("lambda=%g symmetry broken at n=%d", lambda, n));
                }
        }
    }
    // lambda = 0 entries are the raw uniforms; their mean sits near 1/2.
    double sum = 0.0;
    long count = 0;
    for (int rep = 0; rep < 50; ++rep) {
        DistanceMatrix m = generate_matrix(uniform_params(40, 0.0, kVerifySeed), rep);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j)
                if (i != j) {
                    sum += m.at(i, j);
                    ++count;
                }
    }
    const double mean = sum / static_cast<double>(count);
    if (std::abs(mean - 0.5) > 0.005)
        return result("ensemble-identities", false, fmt("uniform mean %.4f far from 0.5", mean));
    return result("ensemble-identities", true, fmt("uniform mean %.4f", mean));
}

CheckResult check_shift_argmin() {
    SplitMix64 mix(kVerifySeed + 1);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(mix.next() % 5);
        const double lambda = -1.0 + 0.25 * static_cast<double>(mix.next() % 9);
        DistanceMatrix m = generate_matrix(uniform_params(n, lambda, kVerifySeed + 2), rep);
        ShiftedMatrix sh = shift_nonnegative(m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && sh.matrix.at(i, j) < 0.0)
                    return result("shift-argmin", false, "negative entry after shift");
        Assignment a = brute_force_lap(m);
        Assignment b = brute_force_lap(sh.matrix);
        if (a.sigma != b.sigma)
            return result("shift-argmin", false, fmt("argmin changed, n=%d rep=%d", n, rep));
    }
    return result("shift-argmin", true, "100 matrices, argmin preserved");
}

CheckResult check_solver_oracle(const SolverFn& solver, int trials_per_cell, int n_max,
                                const char* name) {
    double worst = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        for (double lambda : {-1.0, 0.0, 1.0}) {
            for (int t = 0; t < trials_per_cell; ++t) {
                DistanceMatrix m =
                    generate_matrix(uniform_params(n, lambda, kVerifySeed + 3), t);
                Assignment fast = solver(m);
                Assignment slow = brute_force_lap(m);
                const double diff = std::abs(fast.cost - slow.cost);
                worst = std::max(worst, diff);
                if (diff > 1e-9)
                    return result(name, false,
                                  fmt("cost gap %.3e at n=%d lambda=%g trial=%d", diff, n,
                                      lambda, t));
            }
        }
    }
    return result(name, true, fmt("max |cost gap| %.3e", worst));
}

CheckResult check_shift_invariance(const SolverFn& solver) {
    SplitMix64 mix(kVerifySeed + 4);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 2 + static_cast<int>(mix.next() % 19);
        const double lambda = -1.0 + 0.1 * static_cast<double>(mix.next() % 21);
        DistanceMatrix m = generate_matrix(uniform_params(n, lambda, kVerifySeed + 5), rep);
        if (solver(m).sigma != solver(shift_nonnegative(m).matrix).sigma)
            return result("solver-shift-invariance", false, fmt("n=%d rep=%d", n, rep));
    }
    return result("solver-shift-invariance", true, "100 instances");
}

CheckResult check_cycle_decomposition() {
    // All 9 derangements of 4 elements: 3 of type 2+2, 6 of type 4.
    auto census = permutation_cycle_census(2, 4);
    if (census[1] != 6 || census[2] != 3)
        return result("cycle-decomposition", false, "S4 derangement census mismatch");
    Xoshiro256ss rng(kVerifySeed + 6);
    for (int rep = 0; rep < 2000; ++rep) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 64);
        std::vector<int> sigma(static_cast<std::size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(sigma[static_cast<std::size_t>(i)],
                      sigma[rng.next_u64() % static_cast<std::uint64_t>(i + 1)]);
        CycleStats stats = decompose(sigma);
        int total = 0;
        for (auto [len, cnt] : stats.cycle_lengths) total += len * cnt;
        if (total != n || stats.n_cycles < 1)
            return result("cycle-decomposition", false, "lengths do not partition n");
        // Walking sigma along any cycle must return to its start.
        int start = 0, cur = sigma[0], steps = 1;
        while (cur != start && steps <= n) {
            cur = sigma[static_cast<std::size_t>(cur)];
            ++steps;
        }
        if (cur != start)
            return result("cycle-decomposition", false, "cycle walk failed to close");
    }
    return result("cycle-decomposition", true, "2000 random permutations");
}

CheckResult check_stirling_tables() {
    for (int r = 1; r <= 3; ++r) {
        StirlingTable rec = stirling_table(r, 40);
        StirlingTable egf = stirling_table_egf(r, 40);
        for (int n = 0; n <= 40; ++n)
            for (int k = 0; k <= n; ++k)
                if (rec.at(n, k) != egf.at(n, k))
                    return result("stirling-tables", false,
                                  fmt("recurrence vs EGF mismatch r=%d n=%d k=%d", r, n, k));
        for (int n = r; n <= 7; ++n) {
            auto census = permutation_cycle_census(r, n);
            for (int k = 0; k <= n; ++k)
                if (rec.at(n, k) != BigInt(census[static_cast<std::size_t>(k)]))
                    return result("stirling-tables", false,
                                  fmt("enumeration mismatch r=%d n=%d k=%d", r, n, k));
        }
    }
    StirlingTable d2 = stirling_table(2, 60);
    for (int n = 0; n <= 60; ++n)
        if (d2.row_sum(n) != derangement_number(n))
            return result("stirling-tables", false, fmt("derangement row sum off at n=%d", n));
    return result("stirling-tables", true, "recurrence == EGF == enumeration; row sums OK");
}

CheckResult check_exact_vs_series_fast() {
    for (int r : {2, 3}) {
        auto exact = expected_cycles_exact_all(r, 40);
        auto series = expected_cycles_series_all(r, 40);
        if (exact != series)
            return result("analytic-exact-vs-series", false, fmt("mismatch for r=%d", r));
    }
    if (expected_cycles_exact(2, 4) != BigRational(4, 3))
        return result("analytic-exact-vs-series", false, "d2 mean at n=4 is not 4/3");
    if (expected_cycles_exact(3, 6) != BigRational(5, 4))
        return result("analytic-exact-vs-series", false, "d3 mean at n=6 is not 5/4");
    auto h = expected_cycles_exact_all(1, 60);
    for (int n = 1; n <= 60; ++n)
        if (h[static_cast<std::size_t>(n - 1)] != harmonic(n))
            return result("analytic-exact-vs-series", false,
                          fmt("r=1 mean differs from H_n at n=%d", n));
    return result("analytic-exact-vs-series", true, "exact == series (n <= 40), r=1 == H_n");
}

CheckResult check_series_algebra() {
    const std::size_t order = 24;
    PowerSeries one_minus_x(order);
    one_minus_x.set_coeff(0, BigRational(1));
    one_minus_x.set_coeff(1, BigRational(-1));
    if (one_minus_x.log().exp() != one_minus_x)
        return result("series-algebra", false, "exp(log(1-x)) != 1-x");
    PowerSeries g = PowerSeries::log_one_minus_x(order).scaled(BigRational(-1)).exp();
    if (g * g.inverse() != PowerSeries::one(order))
        return result("series-algebra", false, "f * inverse(f) != 1");
    return result("series-algebra", true, "exp/log and inverse round-trips exact");
}

CheckResult check_aggregate_conventions() {
    auto record = [](int n_cycles) {
        TrialRecord r;
        r.n = 5;
        r.lambda = 0.0;
        r.n_cycles = n_cycles;
        r.tour_length = 1.0;
        return r;
    };
    SweepSummary a = aggregate({record(1), record(2)});
    if (std::abs(a.mean_cycles - 1.5) > 1e-15 || std::abs(a.sem_cycles - 0.5) > 1e-15)
        return result("aggregate-sem", false,
                      fmt("mean/sem of {1,2} = %.6f/%.6f", a.mean_cycles, a.sem_cycles));
    SweepSummary b = aggregate({record(1), record(1), record(1)});
    if (b.sem_cycles != 0.0)
        return result("aggregate-sem", false, "constant sample has nonzero sem");
    std::vector<TrialRecord> mixed;
    for (int i = 0; i < 100; ++i) {
        TrialRecord r = record(1);
        r.is_n_cycle = i < 25;
        mixed.push_back(r);
    }
    SweepSummary c = aggregate(mixed);
    if (std::abs(c.p_n_cycle - 0.25) > 1e-15 ||
        std::abs(c.sem_p_n_cycle - std::sqrt(0.25 * 0.75 / 100.0)) > 1e-15)
        return result("aggregate-sem", false, "binomial sem mismatch");
    return result("aggregate-sem", true, "sample-sd and binomial sem conventions hold");
}

CheckResult check_pn_theory_small_n() {
    auto census = permutation_cycle_census(2, 5);
    long long derangements = 0, five_cycles = census[1];
    for (long long c : census) derangements += c;
    const double exact_fraction =
        static_cast<double>(five_cycles) / static_cast<double>(derangements);
    const double theory = p_n_cycle_theory(PnRegime::LambdaZero, 5);
    if (std::abs(theory - exact_fraction) / exact_fraction > 0.01)
        return result("pn-theory", false,
                      fmt("e/5 = %.4f vs exact %.4f", theory, exact_fraction));
    return result("pn-theory", true,
                  fmt("e/5 = %.4f vs exact 24/44 = %.4f", theory, exact_fraction));
}

}  // namespace

std::vector<CheckResult> fast_battery(const SolverFn& solver) {
    std::vector<CheckResult> out;
    out.push_back(check_ensemble_identities());
    out.push_back(check_shift_argmin());
    out.push_back(check_solver_oracle(solver, 200, 6, "solver-oracle-fast"));
    out.push_back(check_shift_invariance(solver));
    out.push_back(check_cycle_decomposition());
    out.push_back(check_stirling_tables());
    out.push_back(check_exact_vs_series_fast());
    out.push_back(check_series_algebra());
    out.push_back(check_aggregate_conventions());
    out.push_back(check_pn_theory_small_n());
    return out;
}

std::vector<CheckResult> fast_battery() {
    return fast_battery([](const DistanceMatrix& m) { return solve_lap(m); });
}

CheckResult solver_oracle_extensive(const SolverFn& solver) {
    return check_solver_oracle(solver, 1000, 7, "solver-oracle");
}

CheckResult analytic_equivalence() {
    for (int r : {2, 3}) {
        auto exact = expected_cycles_exact_all(r, 60);
        auto series = expected_cycles_series_all(r, 60);
        if (exact != series)
            return result("analytic-equivalence", false,
                          fmt("exact != series for r=%d somewhere in n <= 60", r));
    }
    for (int r = 1; r <= 3; ++r) {
        StirlingTable table = stirling_table(r, 9);
        for (int n = r; n <= 9; ++n) {
            auto census = permutation_cycle_census(r, n);
            BigInt total, weighted;
            for (int k = 0; k <= n; ++k) {
                if (table.at(n, k) != BigInt(census[static_cast<std::size_t>(k)]))
                    return result("analytic-equivalence", false,
                                  fmt("d_%d(%d,%d) disagrees with enumeration", r, n, k));
                total += BigInt(census[static_cast<std::size_t>(k)]);
                weighted += BigInt(census[static_cast<std::size_t>(k)]) * k;
            }
            if (BigRational(weighted, total) != expected_cycles_exact(r, n))
                return result("analytic-equivalence", false,
                              fmt("enumerated mean differs at r=%d n=%d", r, n));
        }
    }
    auto r1 = expected_cycles_exact_all(1, 100);
    for (int n = 1; n <= 100; ++n)
        if (r1[static_cast<std::size_t>(n - 1)] != harmonic(n))
            return result("analytic-equivalence", false, fmt("r=1 mean != H_n at n=%d", n));
    return result("analytic-equivalence", true,
                  "exact == series (r=2,3, n<=60); tables == enumeration (n<=9); r=1 == H_n");
}

namespace {

SweepConfig mc_config(std::vector<int> n_values, std::vector<double> lambda_values, int trials) {
    SweepConfig cfg;
    cfg.n_values = std::move(n_values);
    cfg.lambda_values = std::move(lambda_values);
    cfg.trials = trials;
    cfg.master_seed = kVerifySeed;
    return cfg;
}

}  // namespace

CheckResult mc_lambda_zero_mean_cycles() {
    auto summaries = run_sweep(mc_config({10, 25, 50, 100}, {0.0}, 100000));
    std::string detail;
    for (const SweepSummary& s : summaries) {
        const double target = expected_cycles_exact(2, s.n).to_double();
        const double gap = std::abs(s.mean_cycles - target);
        detail += fmt("n=%d gap=%.2e 3sem=%.2e; ", s.n, gap, 3.0 * s.sem_cycles);
        if (gap > 3.0 * s.sem_cycles)
            return result("mc-lambda0-mean-cycles", false, detail);
    }
    return result("mc-lambda0-mean-cycles", true, detail);
}

CheckResult mc_lambda_minus_one_mean_cycles() {
    auto summaries = run_sweep(mc_config({100}, {-1.0}, 10000));
    const SweepSummary& s = summaries.front();
    const double target = expected_cycles_exact(3, 100).to_double();
    const double gap = std::abs(s.mean_cycles - target);
    return result("mc-lambda-1-mean-cycles", gap <= 3.0 * s.sem_cycles,
                  fmt("mean=%.5f target=%.5f gap=%.2e 3sem=%.2e", s.mean_cycles, target, gap,
                      3.0 * s.sem_cycles));
}

CheckResult mc_lambda_one_regime() {
    long long even_violations = 0;
    auto summaries =
        run_sweep(mc_config({100}, {1.0}, 1000),
                  [&](const SweepSummary&, const std::vector<TrialRecord>& records) {
                      for (const TrialRecord& r : records)
                          if (r.max_even_cycle_length >= 4) ++even_violations;
                  });
    const SweepSummary& s = summaries.front();
    const bool mean_ok = std::abs(s.mean_cycles - 50.0) <= 0.05 * 50.0;
    return result("mc-lambda1-regime", mean_ok && even_violations == 0,
                  fmt("mean=%.3f (target 50 within 5%%), even cycles >= 4: %lld",
                      s.mean_cycles, even_violations));
}

namespace {

CheckResult p2_decay_check(const char* name, int trials, double slope_lo, double slope_hi,
                           bool check_xi) {
    std::vector<int> n_values;
    for (int n = 6; n <= 30; n += 2) n_values.push_back(n);
    P2DecayResult res = p2_decay_experiment(mc_config(n_values, {-1.0}, trials));
    int used = 0;
    for (const P2DecayPoint& p : res.points) used += p.used ? 1 : 0;
    bool ok = res.fit.slope >= slope_lo && res.fit.slope <= slope_hi;
    std::string detail = fmt("slope=%.4f (want [%.4f, %.4f]) xi=%.4f used=%d/%zu",
                             res.fit.slope, slope_lo, slope_hi, res.xi, used,
                             res.points.size());
    if (check_xi && std::abs(res.xi - 2.565) > 0.1 * 2.565) ok = false;
    return result(name, ok, detail);
}

}  // namespace

CheckResult p2_decay_full() { return p2_decay_check("p2-decay-full", 100000, -1.05, -0.85, true); }

CheckResult p2_decay_smoke() {
    return p2_decay_check("p2-decay-smoke", 10000, -0.941985 - 0.15, -0.941985 + 0.15, false);
}

CheckResult n_cycle_probabilities() {
    auto summaries = run_sweep(mc_config({100}, {-1.0, 0.0, 0.5}, 100000));
    const double n = 100.0;
    std::string detail;
    bool ok = true;
    for (const SweepSummary& s : summaries) {
        if (s.lambda < 0.0) {
            const double target = std::exp(1.5);
            const double gap = std::abs(n * s.p_n_cycle - target);
            ok = ok && gap <= 3.0 * s.sem_p_n_cycle * n;
            detail += fmt("lam=-1: N*P=%.4f vs %.4f (3semN=%.4f); ", n * s.p_n_cycle, target,
                          3.0 * s.sem_p_n_cycle * n);
        } else if (s.lambda == 0.0) {
            const double target = std::exp(1.0);
            const double gap = std::abs(n * s.p_n_cycle - target);
            ok = ok && gap <= 3.0 * s.sem_p_n_cycle * n;
            detail += fmt("lam=0: N*P=%.4f vs %.4f (3semN=%.4f); ", n * s.p_n_cycle, target,
                          3.0 * s.sem_p_n_cycle * n);
        } else {
            ok = ok && n * s.p_n_cycle < 0.5;
            detail += fmt("lam=0.5: N*P=%.4f (< 0.5)", n * s.p_n_cycle);
        }
    }
    return result("n-cycle-probabilities", ok, detail);
}

CheckResult asymptotic_limit_checks() {
    const double gap_large_n = expected_cycles_asymptotic(Regime::LambdaZero, 10000) -
                               expected_cycles_asymptotic(Regime::LambdaMinusOne, 10000);
    const bool half_ok = std::abs(gap_large_n - 0.5) <= 2e-3;

    auto summaries = run_sweep(mc_config({200}, {-0.5}, 10000));
    const SweepSummary& s = summaries.front();
    const double h200 = harmonic(200).to_double();
    const double gap = std::abs((h200 - s.mean_cycles) - 1.5);
    const bool limit_ok = gap <= 3.0 * s.sem_cycles;
    return result("asymptotic-limits", half_ok && limit_ok,
                  fmt("asym gap at 1e4 = %.6f (want 0.5 +- 2e-3); H_200 - mean = %.4f "
                      "(want 1.5 +- %.4f)",
                      gap_large_n, h200 - s.mean_cycles, 3.0 * s.sem_cycles));
}

CheckResult parisi_checks() {
    SweepConfig cfg = mc_config({50}, {0.0}, 10000);
    cfg.distribution = Distribution::Exponential1;
    cfg.allow_one_cycles = true;
    auto summaries = run_sweep(cfg);
    const SweepSummary& s = summaries.front();
    const double length_target = parisi_length(50);
    const double cycles_target = harmonic(50).to_double();
    const bool length_ok = std::abs(s.mean_length - length_target) <= 3.0 * s.sem_length;
    const bool cycles_ok = std::abs(s.mean_cycles - cycles_target) <= 3.0 * s.sem_cycles;
    return result("parisi-exponential", length_ok && cycles_ok,
                  fmt("length %.5f vs %.5f (3sem=%.5f); cycles %.5f vs H_50=%.5f (3sem=%.5f)",
                      s.mean_length, length_target, 3.0 * s.sem_length, s.mean_cycles,
                      cycles_target, 3.0 * s.sem_cycles));
}

CheckResult asymptotic_fidelity() {
    const struct {
        Regime regime;
        int r;
        const char* label;
    } cases[] = {{Regime::LambdaZero, 2, "lambda0"}, {Regime::LambdaMinusOne, 3, "lambda-1"}};
    std::string detail;
    for (const auto& c : cases) {
        auto exact = expected_cycles_exact_all(c.r, 160);
        auto exact_at = [&](int n) { return exact[static_cast<std::size_t>(n - c.r)]; };
        const BigRational gap50 =
            (expected_cycles_asymptotic_exact(c.regime, 50) - exact_at(50)).abs();
        if (!(gap50 <= BigRational(1, 1000000)))
            return result("asymptotic-fidelity", false,
                          fmt("%s: |gap| at n=50 is %.3e", c.label, gap50.to_double()));
        BigRational prev;
        bool first = true;
        for (int n : {20, 40, 80, 160}) {
            BigRational gap = (expected_cycles_asymptotic_exact(c.regime, n) - exact_at(n)).abs();
            if (!first && !(gap < prev))
                return result("asymptotic-fidelity", false,
                              fmt("%s: truncation error not decreasing at n=%d", c.label, n));
            prev = gap;
            first = false;
        }
        detail += fmt("%s gap@50=%.2e; ", c.label, gap50.to_double());
    }
    return result("asymptotic-fidelity", true, detail);
}

CheckResult sweep_reproducibility(const std::string& cli_path) {
    if (cli_path.empty()) {
        SweepConfig cfg = mc_config({12, 20}, {-0.5, 0.0, 0.5}, 400);
        cfg.master_seed = 777;
        cfg.parallelism_hint = 1;
        const std::string serial_a = summary_csv(run_sweep(cfg));
        const std::string serial_b = summary_csv(run_sweep(cfg));
        cfg.parallelism_hint = 8;
        const std::string parallel = summary_csv(run_sweep(cfg));
        const bool ok = serial_a == serial_b && serial_a == parallel;
        return result("sweep-reproducibility", ok,
                      ok ? "library-level: serial x2 == 8 threads, byte-identical"
                         : "library-level renderings differ");
    }

    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const std::string tag = std::to_string(SplitMix64(kVerifySeed).next() & 0xffffff);
    std::vector<fs::path> files;
    std::vector<int> parallelism = {1, 1, 8};
    for (std::size_t i = 0; i < parallelism.size(); ++i) {
        fs::path out = dir / ("apc_repro_" + tag + "_" + std::to_string(i) + ".csv");
        std::string cmd = "\"" + cli_path +
                          "\" sweep --n-list 12,20 --lambda-list -0.5,0,0.5 --trials 400"
                          " --seed 777 --parallelism " +
                          std::to_string(parallelism[i]) + " --out \"" + out.string() +
                          "\" --format csv >/dev/null 2>&1";
        if (std::system(cmd.c_str()) != 0)
            return result("sweep-reproducibility", false, "cmd_sweep invocation failed");
        files.push_back(out);
    }
    std::vector<std::string> contents;
    for (const fs::path& f : files) {
        std::ifstream in(f, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        contents.push_back(buf.str());
        std::error_code ec;
        fs::remove(f, ec);
    }
    const bool ok = !contents[0].empty() && contents[0] == contents[1] &&
                    contents[0] == contents[2];
    return result("sweep-reproducibility", ok,
                  ok ? "cmd_sweep byte-identical at parallelism 1 (x2) and 8"
                     : "cmd_sweep outputs differ across runs");
}

std::vector<CheckResult> full_battery(const std::string& cli_path) {
    std::vector<CheckResult> out = fast_battery();
    out.push_back(solver_oracle_extensive([](const DistanceMatrix& m) { return solve_lap(m); }));
    out.push_back(analytic_equivalence());
    out.push_back(asymptotic_fidelity());
    out.push_back(asymptotic_limit_checks());
    out.push_back(mc_lambda_zero_mean_cycles());
    out.push_back(mc_lambda_minus_one_mean_cycles());
    out.push_back(mc_lambda_one_regime());
    out.push_back(p2_decay_smoke());
    out.push_back(n_cycle_probabilities());
    out.push_back(parisi_checks());
    out.push_back(sweep_reproducibility(cli_path));
    return out;
}

}  // namespace apc::checks
