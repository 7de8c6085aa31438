// Acceptance suite: one pass/fail line per reproduction criterion. Every
// tolerance is pinned in the checks library. Exits nonzero if anything fails.
//
// Usage: apc_acceptance [--cli <path-to-apcycles-binary>]
// Without --cli, the reproducibility criterion falls back to the
// library-level comparison.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "apcycles/checks.hpp"
#include "apcycles/lap.hpp"

namespace {

struct Criterion {
    const char* id;
    apc::checks::CheckResult result;
    double seconds;
};

}  // namespace

int main(int argc, char** argv) {
    std::string cli_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

    using apc::checks::CheckResult;
    std::vector<Criterion> rows;

    auto run = [&](const char* id, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r = fn();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %-3s %-28s (%6.1fs) %s\n", r.passed ? "PASS" : "FAIL", id,
                    r.name.c_str(), secs, r.detail.c_str());
        std::fflush(stdout);
        rows.push_back(Criterion{id, std::move(r), secs});
    };

    std::printf("acceptance suite (seed %llu)\n",
                static_cast<unsigned long long>(apc::checks::kVerifySeed));

    run("1", [] {
        return apc::checks::solver_oracle_extensive(
            [](const apc::DistanceMatrix& m) { return apc::solve_lap(m); });
    });
    run("2", [] { return apc::checks::analytic_equivalence(); });
    run("3", [] { return apc::checks::mc_lambda_zero_mean_cycles(); });
    run("4", [] { return apc::checks::mc_lambda_minus_one_mean_cycles(); });
    run("5", [] { return apc::checks::mc_lambda_one_regime(); });
    run("6a", [] { return apc::checks::p2_decay_full(); });
    run("6b", [] { return apc::checks::p2_decay_smoke(); });
    run("7", [] { return apc::checks::n_cycle_probabilities(); });
    run("8", [] { return apc::checks::asymptotic_limit_checks(); });
    run("9", [] { return apc::checks::parisi_checks(); });
    run("10", [] { return apc::checks::asymptotic_fidelity(); });
    run("11", [&] { return apc::checks::sweep_reproducibility(cli_path); });

    int failed = 0;
    double total = 0.0;
    for (const Criterion& c : rows) {
        failed += c.result.passed ? 0 : 1;
        total += c.seconds;
    }
    std::printf("%zu criteria, %d failed, %.1fs total\n", rows.size(), failed, total);
    return failed == 0 ? 0 : 1;
}
