#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "apcycles/analytic.hpp"
#include "apcycles/ensemble.hpp"

namespace apc {

// Monte Carlo sweep over a (n, lambda) grid, M trials per grid point.
struct SweepConfig {
    std::vector<int> n_values;
    std::vector<double> lambda_values;
    int trials = 0;
    std::uint64_t master_seed = 0;
    Distribution distribution = Distribution::Uniform01;
    bool allow_one_cycles = false;
    int parallelism_hint = 0;  // 0 = auto, 1 = serial reference path

    void validate() const;
};

// Per-instance measurement: one solved assignment, decomposed.
struct TrialRecord {
    int n = 0;
    double lambda = 0.0;
    int trial_index = 0;
    int n_cycles = 0;
    int two_cycle_count = 0;
    bool is_n_cycle = false;
    int max_even_cycle_length = 0;
    double tour_length = 0.0;  // original, unshifted units
};

// Aggregates over one grid point. sem fields are sample-sd / sqrt(M)
// (n-1 denominator); probability sems are binomial sqrt(p(1-p)/M).
struct SweepSummary {
    int n = 0;
    double lambda = 0.0;
    int trials_used = 0;
    double mean_cycles = 0.0;
    double sem_cycles = 0.0;
    double p2_presence = 0.0;  // fraction of trials with >= 1 two-cycle
    double sem_p2 = 0.0;
    double mean_two_cycles = 0.0;
    double p_n_cycle = 0.0;
    double sem_p_n_cycle = 0.0;
    double mean_length = 0.0;
    double sem_length = 0.0;
    double ratio_p2_over_nc = 0.0;  // mean two-cycle count / mean cycle count
};

// Pure function of its arguments: generates, solves, decomposes.
TrialRecord run_trial(const SweepConfig& config, int n, double lambda, int trial_index);

// Means and standard errors over one homogeneous batch of records.
SweepSummary aggregate(const std::vector<TrialRecord>& records);

// Called once per completed grid point, in grid order, with the records in
// trial order. Lets callers stream raw records without holding the whole
// sweep in memory.
using GridPointSink =
    std::function<void(const SweepSummary&, const std::vector<TrialRecord>&)>;

// Evaluates every grid point (n outer, lambda inner). Trials run in parallel
// per parallelism_hint; records are merged in trial order, so results are
// bit-identical for every thread count.
std::vector<SweepSummary> run_sweep(const SweepConfig& config,
                                    const GridPointSink& sink = nullptr);

// Serial reference implementation; must produce bit-identical results.
std::vector<SweepSummary> run_sweep_serial(const SweepConfig& config,
                                           const GridPointSink& sink = nullptr);

struct P2DecayPoint {
    int n = 0;
    double p2 = 0.0;
    int events = 0;
    bool used = false;  // dropped from the fit when no 2-cycle was ever seen
};

struct P2DecayResult {
    std::vector<P2DecayPoint> points;
    LinearFit fit;     // OLS of ln(p2) against n over the used points
    double xi = 0.0;   // implied decay base e^{-slope}
};

// 2-cycle suppression experiment: requires a single lambda < 0 and >= 3
// n values; throws when fewer than 3 grid points retain a nonzero p2.
P2DecayResult p2_decay_experiment(const SweepConfig& config);

// Fit stage alone, on precomputed (n, p2) points; exposed so exact synthetic
// inputs can drive it directly.
P2DecayResult p2_decay_fit(std::vector<P2DecayPoint> points);

// Byte-stable renderings (LF line endings; lambda %.6f, statistics %.9g).
std::string summary_csv(const std::vector<SweepSummary>& summaries);
std::string summary_json(const std::vector<SweepSummary>& summaries);
std::string records_csv_header();
void append_records_csv(std::string& out, const std::vector<TrialRecord>& records);

}  // namespace apc
