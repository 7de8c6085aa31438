// Command-line front end: generate correlated random assignment instances,
// solve them exactly, measure cycle statistics, and compare against the
// exact generating-function predictions.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "apcycles/analytic.hpp"
#include "apcycles/checks.hpp"
#include "apcycles/cycles.hpp"
#include "apcycles/ensemble.hpp"
#include "apcycles/experiment.hpp"
#include "apcycles/lap.hpp"
#include "apcycles/stirling.hpp"
#include "cli_parse.hpp"

namespace {

struct SolveArgs {
    std::string matrix_file;
    int n = 0;
    double lambda = 0.0;
    std::uint64_t seed = 0;
    int trial = 0;
    bool exponential = false;
    bool allow_one_cycles = false;
    bool have_n = false, have_lambda = false, have_seed = false;
};

struct SweepArgs {
    std::string n_list, lambda_list;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string out_path, raw_out_path;
    std::string format = "csv";
    bool exponential = false;
    bool allow_one_cycles = false;
    int parallelism = 0;
};

struct P2FitArgs {
    double lambda = 0.0;
    std::string n_list;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string out_path;
};

struct AnalyticArgs {
    std::string what;
    int r = 0;
    int n = 0;
    int n_max = 0;
    std::string regime;
    std::string out_path;
    bool have_r = false, have_n = false, have_n_max = false;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string stat_str(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int cmd_solve(const SolveArgs& args) {
    apc::DistanceMatrix m;
    if (!args.matrix_file.empty()) {
        std::ifstream in(args.matrix_file);
        if (!in) throw std::runtime_error("cannot open matrix file: " + args.matrix_file);
        m = apc::read_matrix(in);
    } else {
        if (!args.have_n || !args.have_lambda || !args.have_seed)
            throw std::invalid_argument(
                "solve needs a matrix file or all of --n, --lambda and --seed");
        apc::EnsembleParams params{args.n, args.lambda,
                                   args.exponential ? apc::Distribution::Exponential1
                                                    : apc::Distribution::Uniform01,
                                   args.allow_one_cycles, args.seed};
        m = apc::generate_matrix(params, args.trial);
    }

    const apc::Assignment a = apc::solve_lap(m);
    const apc::CycleStats stats = apc::decompose(a.sigma);

    std::string out;
    out += "n " + std::to_string(m.n) + "\n";
    out += "cost " + stat_str(a.cost) + "\n";
    out += "sigma";
    for (int s : a.sigma) out += ' ' + std::to_string(s);
    out += "\ncycle_lengths";
    for (const auto& [len, count] : stats.cycle_lengths)
        out += ' ' + std::to_string(len) + ':' + std::to_string(count);
    out += "\nn_cycles " + std::to_string(stats.n_cycles) + "\n";
    out += "two_cycles " + std::to_string(stats.two_cycle_count) + "\n";
    out += "is_n_cycle " + std::to_string(stats.is_n_cycle ? 1 : 0) + "\n";
    out += "max_even_cycle_length " + std::to_string(stats.max_even_cycle_length) + "\n";
    std::fputs(out.c_str(), stdout);
    return 0;
}

int cmd_sweep(const SweepArgs& args) {
    apc::SweepConfig cfg;
    cfg.n_values = apc::cli::parse_int_list(args.n_list);
    cfg.lambda_values = apc::cli::parse_double_list(args.lambda_list);
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;
    cfg.distribution =
        args.exponential ? apc::Distribution::Exponential1 : apc::Distribution::Uniform01;
    cfg.allow_one_cycles = args.allow_one_cycles;
    cfg.parallelism_hint = args.parallelism;
    if (args.format != "csv" && args.format != "json")
        throw std::invalid_argument("--format must be csv or json");

    std::string raw;
    apc::GridPointSink sink = nullptr;
    if (!args.raw_out_path.empty()) {
        raw = apc::records_csv_header();
        sink = [&raw](const apc::SweepSummary&, const std::vector<apc::TrialRecord>& records) {
            apc::append_records_csv(raw, records);
        };
    }

    const std::vector<apc::SweepSummary> summaries = apc::run_sweep(cfg, sink);
    write_file(args.out_path,
               args.format == "csv" ? apc::summary_csv(summaries) : apc::summary_json(summaries));
    if (!args.raw_out_path.empty()) write_file(args.raw_out_path, raw);
    std::printf("wrote %s (%zu grid points, %d trials each)\n", args.out_path.c_str(),
                summaries.size(), cfg.trials);
    return 0;
}

int cmd_p2fit(const P2FitArgs& args) {
    apc::SweepConfig cfg;
    cfg.n_values = apc::cli::parse_int_list(args.n_list);
    cfg.lambda_values = {args.lambda};
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;

    const apc::P2DecayResult res = apc::p2_decay_experiment(cfg);

    std::printf("lambda %.6f\n", args.lambda);
    std::string points_csv = "n,p2,events,used\n";
    for (const apc::P2DecayPoint& p : res.points) {
        std::printf("n=%d p2=%s events=%d used=%d\n", p.n, stat_str(p.p2).c_str(), p.events,
                    p.used ? 1 : 0);
        points_csv += std::to_string(p.n) + ',' + stat_str(p.p2) + ',' +
                      std::to_string(p.events) + ',' + (p.used ? "1\n" : "0\n");
    }
    std::printf("slope %s intercept %s r_squared %s xi %s\n", stat_str(res.fit.slope).c_str(),
                stat_str(res.fit.intercept).c_str(), stat_str(res.fit.r_squared).c_str(),
                stat_str(res.xi).c_str());
    if (!args.out_path.empty()) write_file(args.out_path, points_csv);
    return 0;
}

int cmd_analytic(const AnalyticArgs& args) {
    if (args.what == "harmonic") {
        if (!args.have_n) throw std::invalid_argument("harmonic needs --n");
        std::printf("%s\n", apc::harmonic(args.n).to_string().c_str());
        return 0;
    }
    if (args.what == "expected-cycles") {
        if (!args.have_r || !args.have_n)
            throw std::invalid_argument("expected-cycles needs --r and --n");
        const apc::BigRational exact = apc::expected_cycles_exact(args.r, args.n);
        std::printf("%s (~%.9f)\n", exact.to_string().c_str(), exact.to_double());
        if (args.n >= 12 && (args.r == 2 || args.r == 3)) {
            const apc::Regime regime =
                args.r == 2 ? apc::Regime::LambdaZero : apc::Regime::LambdaMinusOne;
            std::printf("asymptotic ~%.9f\n", apc::expected_cycles_asymptotic(regime, args.n));
        }
        return 0;
    }
    if (args.what == "stirling") {
        if (!args.have_r || !args.have_n_max)
            throw std::invalid_argument("stirling needs --r and --n-max");
        const std::string csv = apc::stirling_csv(apc::stirling_table(args.r, args.n_max));
        if (args.out_path.empty())
            std::fputs(csv.c_str(), stdout);
        else
            write_file(args.out_path, csv);
        return 0;
    }
    if (args.what == "pn") {
        if (!args.have_n) throw std::invalid_argument("pn needs --n");
        apc::PnRegime regime;
        if (args.regime == "negative")
            regime = apc::PnRegime::LambdaNegative;
        else if (args.regime == "zero")
            regime = apc::PnRegime::LambdaZero;
        else
            throw std::invalid_argument("pn needs --regime negative or --regime zero");
        std::printf("%.9f\n", apc::p_n_cycle_theory(regime, args.n));
        return 0;
    }
    if (args.what == "parisi") {
        if (!args.have_n) throw std::invalid_argument("parisi needs --n");
        std::printf("%.9f\n", apc::parisi_length(args.n));
        return 0;
    }
    throw std::invalid_argument("unknown --what: " + args.what);
}

int cmd_verify(const std::string& level, const char* argv0) {
    std::vector<apc::checks::CheckResult> results;
    if (level == "fast") {
        results = apc::checks::fast_battery();
    } else if (level == "full") {
        std::string cli_path;
        std::error_code ec;
        auto self = std::filesystem::canonical("/proc/self/exe", ec);
        cli_path = ec ? std::string(argv0) : self.string();
        results = apc::checks::full_battery(cli_path);
    } else {
        throw std::invalid_argument("--level must be fast or full");
    }

    int passed = 0;
    for (const auto& r : results) {
        std::printf("[%s] %s — %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
        passed += r.passed ? 1 : 0;
    }
    std::printf("passed %d/%zu checks\n", passed, results.size());
    return passed == static_cast<int>(results.size()) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cycle structure of optimal random assignments: instance generation, exact "
                 "solving, Monte Carlo sweeps and exact predictions"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve one instance, print its cycles");
    solve->add_option("matrix_file", solve_args.matrix_file,
                      "Instance file: first line N, then N rows of N values");
    solve->add_option("--n", solve_args.n, "Instance dimension (generated instance)");
    solve->add_option("--lambda", solve_args.lambda, "Correlation parameter in [-1,1]");
    solve->add_option("--seed", solve_args.seed, "Master seed (required when generating)");
    solve->add_option("--trial", solve_args.trial, "Trial index of the generated instance");
    solve->add_flag("--exponential", solve_args.exponential, "Exp(1) entries (lambda = 0 only)");
    solve->add_flag("--allow-one-cycles", solve_args.allow_one_cycles,
                    "Random diagonal instead of the sentinel");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over an (n, lambda) grid");
    sweep->add_option("--n-list", sweep_args.n_list, "n values: '25,50,100' or '10:100:10'")
        ->required();
    sweep->add_option("--lambda-list", sweep_args.lambda_list,
                      "lambda values: '0' or '-1:1:0.1'")
        ->required();
    sweep->add_option("--trials", sweep_args.trials, "Trials per grid point")->required();
    sweep->add_option("--seed", sweep_args.seed, "Master seed")->required();
    sweep->add_option("--out", sweep_args.out_path, "Summary output path")->required();
    sweep->add_option("--format", sweep_args.format, "csv (default) or json");
    sweep->add_option("--raw-out", sweep_args.raw_out_path, "Optional per-trial record CSV");
    sweep->add_flag("--exponential", sweep_args.exponential, "Exp(1) entries (lambda = 0 only)");
    sweep->add_flag("--allow-one-cycles", sweep_args.allow_one_cycles,
                    "Random diagonal instead of the sentinel");
    sweep->add_option("--parallelism", sweep_args.parallelism,
                      "Worker threads; 0 = auto, 1 = serial reference");

    P2FitArgs p2_args;
    CLI::App* p2fit = app.add_subcommand("p2fit", "Fit the exponential 2-cycle suppression");
    p2fit->add_option("--lambda", p2_args.lambda, "Single negative lambda")->required();
    p2fit->add_option("--n-list", p2_args.n_list, "At least 3 n values")->required();
    p2fit->add_option("--trials", p2_args.trials, "Trials per n")->required();
    p2fit->add_option("--seed", p2_args.seed, "Master seed")->required();
    p2fit->add_option("--out", p2_args.out_path, "Optional per-n points CSV");

    AnalyticArgs an_args;
    CLI::App* analytic = app.add_subcommand("analytic", "Exact and theoretical values");
    analytic
        ->add_option("--what", an_args.what,
                     "expected-cycles | stirling | pn | parisi | harmonic")
        ->required();
    analytic->add_option("--r", an_args.r, "Minimum cycle length (1, 2 or 3)");
    analytic->add_option("--n", an_args.n, "Dimension");
    analytic->add_option("--n-max", an_args.n_max, "Table size for stirling");
    analytic->add_option("--regime", an_args.regime, "pn regime: negative | zero");
    analytic->add_option("--out", an_args.out_path, "Write table output here instead of stdout");

    std::string verify_level = "fast";
    CLI::App* verify = app.add_subcommand("verify", "Run the validation batteries");
    verify->add_option("--level", verify_level, "fast (default) or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    solve_args.have_n = solve->count("--n") > 0;
    solve_args.have_lambda = solve->count("--lambda") > 0;
    solve_args.have_seed = solve->count("--seed") > 0;
    an_args.have_r = analytic->count("--r") > 0;
    an_args.have_n = analytic->count("--n") > 0;
    an_args.have_n_max = analytic->count("--n-max") > 0;

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (sweep->parsed()) return cmd_sweep(sweep_args);
        if (p2fit->parsed()) return cmd_p2fit(p2_args);
        if (analytic->parsed()) return cmd_analytic(an_args);
        if (verify->parsed()) return cmd_verify(verify_level, argv[0]);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
