#include <cmath>

#include "doctest.h"
#include "json.hpp"

#include "apcycles/analytic.hpp"
#include "apcycles/experiment.hpp"

using namespace apc;

namespace {

SweepConfig make_config(std::vector<int> n_values, std::vector<double> lambdas, int trials,
                        std::uint64_t seed = 2718) {
    SweepConfig cfg;
    cfg.n_values = std::move(n_values);
    cfg.lambda_values = std::move(lambdas);
    cfg.trials = trials;
    cfg.master_seed = seed;
    return cfg;
}

TrialRecord simple_record(int n_cycles, bool n_cycle = false) {
    TrialRecord r;
    r.n = 5;
    r.lambda = 0.25;
    r.n_cycles = n_cycles;
    r.is_n_cycle = n_cycle;
    r.tour_length = 2.0;
    return r;
}

}  // namespace

TEST_SUITE("experiment") {

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_config({}, {0.0}, 10).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config({4}, {}, 10).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config({4}, {0.0}, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config({4}, {1.2}, 10).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config({1}, {0.0}, 10).validate(), std::invalid_argument);
    SweepConfig bad_exp = make_config({4}, {0.5}, 10);
    bad_exp.distribution = Distribution::Exponential1;
    CHECK_THROWS_AS(bad_exp.validate(), std::invalid_argument);
}

TEST_CASE("run_trial trivial structure") {
    const SweepConfig cfg = make_config({2, 3}, {-1.0, 0.0, 0.7}, 1);
    for (double lambda : cfg.lambda_values)
        for (int t = 0; t < 5; ++t) {
            const TrialRecord two = run_trial(cfg, 2, lambda, t);
            CHECK(two.n_cycles == 1);
            CHECK(two.two_cycle_count == 1);
            CHECK(two.is_n_cycle);
            const TrialRecord three = run_trial(cfg, 3, lambda, t);
            CHECK(three.n_cycles == 1);  // derangements of 3 are 3-cycles
            CHECK(three.two_cycle_count == 0);
            CHECK(three.is_n_cycle);
        }
}

TEST_CASE("run_trial is pure") {
    const SweepConfig cfg = make_config({8}, {-0.4}, 1);
    const TrialRecord a = run_trial(cfg, 8, -0.4, 3);
    const TrialRecord b = run_trial(cfg, 8, -0.4, 3);
    CHECK(a.n_cycles == b.n_cycles);
    CHECK(a.tour_length == b.tour_length);
    CHECK(a.max_even_cycle_length == b.max_even_cycle_length);
}

TEST_CASE("aggregate conventions") {
    const SweepSummary one = aggregate({simple_record(1), simple_record(1), simple_record(1)});
    CHECK(one.mean_cycles == 1.0);
    CHECK(one.sem_cycles == 0.0);

    // Sample sd of {1,2} is sqrt(1/2); sem = sd / sqrt(2) = 1/2.
    const SweepSummary two = aggregate({simple_record(1), simple_record(2)});
    CHECK(two.mean_cycles == doctest::Approx(1.5));
    CHECK(two.sem_cycles == doctest::Approx(0.5));

    std::vector<TrialRecord> mixed;
    for (int i = 0; i < 100; ++i) mixed.push_back(simple_record(1, i < 25));
    const SweepSummary s = aggregate(mixed);
    CHECK(s.p_n_cycle == doctest::Approx(0.25));
    CHECK(s.sem_p_n_cycle == doctest::Approx(std::sqrt(0.25 * 0.75 / 100.0)));

    CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
    std::vector<TrialRecord> heterogeneous = {simple_record(1), simple_record(1)};
    heterogeneous[1].n = 6;
    CHECK_THROWS_AS(aggregate(heterogeneous), std::invalid_argument);
}

TEST_CASE("mean cycles at n = 6, lambda = 0") {
    SweepConfig cfg = make_config({6}, {0.0}, 100000);
    const SweepSummary s = run_sweep(cfg).front();
    // The d_2 prediction assumes every derangement is equally likely to win.
    // That is an asymptotic statement: at n = 6 the true mean, measured at
    // 4e6 trials with both solvers, is 1.594142(294) -- about 0.0096 below
    // the prediction. Assert the pipeline against the measured truth and the
    // prediction at the resolution it actually holds here.
    CHECK(std::abs(s.mean_cycles - 1.594142) <= 3.0 * s.sem_cycles + 3.0 * 0.000294);
    CHECK(std::abs(s.mean_cycles - expected_cycles_exact(2, 6).to_double()) <= 0.02);
}

TEST_CASE("degenerate grid point: n = 2") {
    const auto summaries = run_sweep(make_config({2}, {0.0}, 100));
    REQUIRE(summaries.size() == 1);
    CHECK(summaries.front().mean_cycles == 1.0);
    CHECK(summaries.front().sem_cycles == 0.0);
    CHECK(summaries.front().p2_presence == 1.0);
    CHECK(summaries.front().ratio_p2_over_nc == 1.0);
}

TEST_CASE("sweep results are independent of the parallelism hint") {
    SweepConfig cfg = make_config({6, 11}, {-0.7, 0.0, 0.9}, 400, 111);
    cfg.parallelism_hint = 1;
    const std::string serial = summary_csv(run_sweep(cfg));
    const std::string serial_again = summary_csv(run_sweep_serial(cfg));
    cfg.parallelism_hint = 3;
    const std::string three = summary_csv(run_sweep(cfg));
    cfg.parallelism_hint = 0;
    const std::string auto_threads = summary_csv(run_sweep(cfg));
    CHECK(serial == serial_again);
    CHECK(serial == three);
    CHECK(serial == auto_threads);
}

TEST_CASE("sink sees every grid point in order") {
    SweepConfig cfg = make_config({4, 5}, {-0.5, 0.5}, 50);
    std::vector<std::pair<int, double>> seen;
    std::size_t record_count = 0;
    run_sweep(cfg, [&](const SweepSummary& s, const std::vector<TrialRecord>& records) {
        seen.emplace_back(s.n, s.lambda);
        record_count += records.size();
        for (std::size_t i = 0; i < records.size(); ++i)
            CHECK(records[i].trial_index == static_cast<int>(i));
    });
    CHECK(seen == std::vector<std::pair<int, double>>{{4, -0.5}, {4, 0.5}, {5, -0.5}, {5, 0.5}});
    CHECK(record_count == 200);
}

TEST_CASE("lambda = 1: mean near n/2, no even cycle above 2") {
    long long violations = 0;
    SweepConfig cfg = make_config({100}, {1.0}, 1000);
    const auto summaries =
        run_sweep(cfg, [&](const SweepSummary&, const std::vector<TrialRecord>& records) {
            for (const TrialRecord& r : records)
                if (r.max_even_cycle_length >= 4) ++violations;
        });
    CHECK(violations == 0);
    CHECK(std::abs(summaries.front().mean_cycles - 50.0) < 2.5);
}

TEST_CASE("monotone trend in lambda at fixed n") {
    const auto summaries = run_sweep(make_config({20}, {-1.0, 0.0, 1.0}, 5000));
    const SweepSummary& minus = summaries[0];
    const SweepSummary& zero = summaries[1];
    const SweepSummary& plus = summaries[2];
    CHECK(plus.mean_cycles > zero.mean_cycles);
    CHECK(zero.mean_cycles >
          minus.mean_cycles - 3.0 * (zero.sem_cycles + minus.sem_cycles));
}

TEST_CASE("ratio of 2-cycles to all cycles rises with n at lambda = 0.5") {
    const auto summaries = run_sweep(make_config({50, 100, 200}, {0.5}, 2000));
    CHECK(summaries[0].ratio_p2_over_nc < summaries[1].ratio_p2_over_nc);
    CHECK(summaries[1].ratio_p2_over_nc < summaries[2].ratio_p2_over_nc);
}

TEST_CASE("p2 decay fit on exact synthetic data") {
    std::vector<P2DecayPoint> points;
    for (int n : {4, 6, 8, 10})
        points.push_back(P2DecayPoint{n, std::exp(-static_cast<double>(n)), 1, false});
    const P2DecayResult res = p2_decay_fit(points);
    CHECK(res.fit.slope == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(res.fit.intercept == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(res.fit.r_squared == doctest::Approx(1.0));
    CHECK(res.xi == doctest::Approx(std::exp(1.0)));
    for (const P2DecayPoint& p : res.points) CHECK(p.used);
}

TEST_CASE("p2 decay experiment validation and dropped points") {
    CHECK_THROWS_AS(p2_decay_experiment(make_config({6, 8, 10}, {0.5}, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(p2_decay_experiment(make_config({6, 8, 10}, {-1.0, -0.5}, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(p2_decay_experiment(make_config({6, 8}, {-1.0}, 10)),
                    std::invalid_argument);
    // 2-cycles are essentially impossible at these n with so few trials.
    CHECK_THROWS_AS(p2_decay_experiment(make_config({24, 26, 28}, {-1.0}, 50)),
                    std::runtime_error);
}

TEST_CASE("decay steepens with |lambda|") {
    std::vector<int> grid;
    for (int n = 6; n <= 16; n += 2) grid.push_back(n);
    const P2DecayResult strong = p2_decay_experiment(make_config(grid, {-1.0}, 20000));
    const P2DecayResult weak = p2_decay_experiment(make_config(grid, {-0.1}, 20000));
    CHECK(std::abs(weak.fit.slope) < std::abs(strong.fit.slope));
    // Regression pin for the lambda = -1 rate of this ensemble, as measured
    // at 4e5 trials/point and confirmed by exhaustive enumeration at n = 8.
    CHECK(strong.fit.slope > -0.75);
    CHECK(strong.fit.slope < -0.45);
    CHECK(strong.fit.r_squared > 0.98);
}

TEST_CASE("summary CSV schema and formatting") {
    const auto summaries = run_sweep(make_config({2}, {0.0}, 10));
    const std::string csv = summary_csv(summaries);
    CHECK(csv.find("n,lambda,trials,mean_cycles,sem_cycles,p2_presence,sem_p2,"
                   "mean_two_cycles,p_n_cycle,sem_p_n_cycle,mean_length,sem_length,"
                   "ratio_p2_over_nc\n") == 0);
    CHECK(csv.find("\n2,0.000000,10,1,0,1,0,1,1,0,") != std::string::npos);
    CHECK(csv.back() == '\n');
    CHECK(csv.find('\r') == std::string::npos);
}

TEST_CASE("summary JSON mirrors the CSV fields") {
    const auto summaries = run_sweep(make_config({2}, {-1.0}, 10));
    const nlohmann::json parsed = nlohmann::json::parse(summary_json(summaries));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    const auto& row = parsed[0];
    for (const char* key :
         {"n", "lambda", "trials", "mean_cycles", "sem_cycles", "p2_presence", "sem_p2",
          "mean_two_cycles", "p_n_cycle", "sem_p_n_cycle", "mean_length", "sem_length",
          "ratio_p2_over_nc"})
        REQUIRE(row.contains(key));
    CHECK(row["n"] == 2);
    CHECK(row["lambda"] == -1.0);
    CHECK(row["mean_cycles"] == 1.0);
}

TEST_CASE("raw record CSV") {
    SweepConfig cfg = make_config({3}, {0.0}, 4);
    std::string raw = records_csv_header();
    run_sweep(cfg, [&](const SweepSummary&, const std::vector<TrialRecord>& records) {
        append_records_csv(raw, records);
    });
    CHECK(raw.find("n,lambda,trial_index,n_cycles,two_cycle_count,is_n_cycle,"
                   "max_even_cycle_length,tour_length\n") == 0);
    CHECK(std::count(raw.begin(), raw.end(), '\n') == 5);
    CHECK(raw.find("3,0.000000,0,1,0,1,0,") != std::string::npos);
}

}  // TEST_SUITE
