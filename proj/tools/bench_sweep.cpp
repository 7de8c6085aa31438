// Benchmark: serial reference sweep vs the OpenMP-parallel one, on the same
// grid and seed. Also asserts the two renderings are byte-identical.

#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "apcycles/experiment.hpp"
#include "cli_parse.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark the serial reference sweep against the OpenMP one"};
    std::string n_list = "60";
    std::string lambda_list = "0";
    int trials = 2000;
    std::uint64_t seed = 1;
    app.add_option("--n-list", n_list, "n values (default 60)");
    app.add_option("--lambda-list", lambda_list, "lambda values (default 0)");
    app.add_option("--trials", trials, "Trials per grid point (default 2000)");
    app.add_option("--seed", seed, "Master seed (default 1)");
    CLI11_PARSE(app, argc, argv);

    apc::SweepConfig cfg;
    cfg.n_values = apc::cli::parse_int_list(n_list);
    cfg.lambda_values = apc::cli::parse_double_list(lambda_list);
    cfg.trials = trials;
    cfg.master_seed = seed;

    auto t0 = std::chrono::steady_clock::now();
    const std::string serial = apc::summary_csv(apc::run_sweep_serial(cfg));
    const double serial_s = seconds_since(t0);

    cfg.parallelism_hint = 0;
    t0 = std::chrono::steady_clock::now();
    const std::string parallel = apc::summary_csv(apc::run_sweep(cfg));
    const double parallel_s = seconds_since(t0);

    const double total_trials =
        static_cast<double>(trials) * cfg.n_values.size() * cfg.lambda_values.size();
    std::printf("serial    %8.3f s  %10.0f trials/s\n", serial_s, total_trials / serial_s);
    std::printf("parallel  %8.3f s  %10.0f trials/s  (%d threads)\n", parallel_s,
                total_trials / parallel_s, omp_get_max_threads());
    std::printf("speedup   %8.2fx\n", serial_s / parallel_s);
    const bool identical = serial == parallel;
    std::printf("outputs byte-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
