#include "apcycles/experiment.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>

#include "apcycles/cycles.hpp"
#include "apcycles/lap.hpp"

#include "json.hpp"

namespace apc {

void SweepConfig::validate() const {
    if (n_values.empty()) throw std::invalid_argument("SweepConfig: empty n list");
    if (lambda_values.empty()) throw std::invalid_argument("SweepConfig: empty lambda list");
    if (trials < 1) throw std::invalid_argument("SweepConfig: trials must be >= 1");
    if (parallelism_hint < 0)
        throw std::invalid_argument("SweepConfig: parallelism_hint must be >= 0");
    for (int n : n_values) {
        for (double lambda : lambda_values) {
            EnsembleParams p{n, lambda, distribution, allow_one_cycles, master_seed};
            p.validate();
        }
    }
}

TrialRecord run_trial(const SweepConfig& config, int n, double lambda, int trial_index) {
    EnsembleParams params{n, lambda, config.distribution, config.allow_one_cycles,
                          config.master_seed};
    const DistanceMatrix m = generate_matrix(params, trial_index);
    const Assignment a = solve_lap(m);

    if (m.diagonal_excluded)
        for (int i = 0; i < n; ++i)
            if (a.sigma[static_cast<std::size_t>(i)] == i)
                throw std::logic_error("run_trial: optimal assignment used a sentinel entry");

    const CycleStats stats = decompose(a.sigma);
    int length_sum = 0;
    for (const auto& [len, count] : stats.cycle_lengths) length_sum += len * count;
    if (length_sum != n)
        throw std::logic_error("run_trial: cycle lengths do not partition the permutation");

    return TrialRecord{n,
                       lambda,
                       trial_index,
                       stats.n_cycles,
                       stats.two_cycle_count,
                       stats.is_n_cycle,
                       stats.max_even_cycle_length,
                       a.cost};
}

SweepSummary aggregate(const std::vector<TrialRecord>& records) {
    if (records.empty()) throw std::invalid_argument("aggregate: no records");
    const int n = records.front().n;
    const double lambda = records.front().lambda;
    for (const TrialRecord& r : records)
        if (r.n != n || r.lambda != lambda)
            throw std::invalid_argument("aggregate: records from mixed grid points");

    const double m = static_cast<double>(records.size());
    double sum_cycles = 0.0, sum_two = 0.0, sum_length = 0.0;
    double p2_events = 0.0, ncycle_events = 0.0;
    for (const TrialRecord& r : records) {
        if (r.n_cycles < 1) throw std::invalid_argument("aggregate: record with no cycles");
        sum_cycles += r.n_cycles;
        sum_two += r.two_cycle_count;
        sum_length += r.tour_length;
        if (r.two_cycle_count >= 1) p2_events += 1.0;
        if (r.is_n_cycle) ncycle_events += 1.0;
    }

    SweepSummary s;
    s.n = n;
    s.lambda = lambda;
    s.trials_used = static_cast<int>(records.size());
    s.mean_cycles = sum_cycles / m;
    s.mean_two_cycles = sum_two / m;
    s.mean_length = sum_length / m;
    s.p2_presence = p2_events / m;
    s.p_n_cycle = ncycle_events / m;

    double ss_cycles = 0.0, ss_length = 0.0;
    for (const TrialRecord& r : records) {
        const double dc = r.n_cycles - s.mean_cycles;
        const double dl = r.tour_length - s.mean_length;
        ss_cycles += dc * dc;
        ss_length += dl * dl;
    }
    if (records.size() > 1) {
        s.sem_cycles = std::sqrt(ss_cycles / (m - 1.0)) / std::sqrt(m);
        s.sem_length = std::sqrt(ss_length / (m - 1.0)) / std::sqrt(m);
    }
    s.sem_p2 = std::sqrt(s.p2_presence * (1.0 - s.p2_presence) / m);
    s.sem_p_n_cycle = std::sqrt(s.p_n_cycle * (1.0 - s.p_n_cycle) / m);
    s.ratio_p2_over_nc = s.mean_two_cycles / s.mean_cycles;
    return s;
}

namespace {

std::vector<TrialRecord> run_grid_point(const SweepConfig& config, int n, double lambda) {
    std::vector<TrialRecord> records(static_cast<std::size_t>(config.trials));
    if (config.parallelism_hint == 1) {
        for (int t = 0; t < config.trials; ++t)
            records[static_cast<std::size_t>(t)] = run_trial(config, n, lambda, t);
        return records;
    }

    const int threads =
        config.parallelism_hint == 0 ? omp_get_max_threads() : config.parallelism_hint;
    std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int t = 0; t < config.trials; ++t) {
        try {
            records[static_cast<std::size_t>(t)] = run_trial(config, n, lambda, t);
        } catch (...) {
#pragma omp critical(apc_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::vector<SweepSummary> run_sweep_impl(const SweepConfig& config, const GridPointSink& sink) {
    config.validate();
    std::vector<SweepSummary> summaries;
    summaries.reserve(config.n_values.size() * config.lambda_values.size());
    for (int n : config.n_values) {
        for (double lambda : config.lambda_values) {
            std::vector<TrialRecord> records = run_grid_point(config, n, lambda);
            SweepSummary s = aggregate(records);
            if (sink) sink(s, records);
            summaries.push_back(s);
        }
    }
    return summaries;
}

}  // namespace

std::vector<SweepSummary> run_sweep(const SweepConfig& config, const GridPointSink& sink) {
    return run_sweep_impl(config, sink);
}

std::vector<SweepSummary> run_sweep_serial(const SweepConfig& config, const GridPointSink& sink) {
    SweepConfig serial = config;
    serial.parallelism_hint = 1;
    return run_sweep_impl(serial, sink);
}

P2DecayResult p2_decay_fit(std::vector<P2DecayPoint> points) {
    std::vector<std::pair<double, double>> fit_points;
    for (P2DecayPoint& p : points) {
        p.used = p.p2 > 0.0;
        if (p.used) fit_points.emplace_back(static_cast<double>(p.n), std::log(p.p2));
    }
    if (fit_points.size() < 3)
        throw std::runtime_error(
            "p2_decay: fewer than 3 grid points with a nonzero 2-cycle probability");
    P2DecayResult result;
    result.points = std::move(points);
    result.fit = fit_linear(fit_points);
    result.xi = std::exp(-result.fit.slope);
    return result;
}

P2DecayResult p2_decay_experiment(const SweepConfig& config) {
    config.validate();
    if (config.lambda_values.size() != 1 || config.lambda_values.front() >= 0.0)
        throw std::invalid_argument("p2_decay: needs exactly one lambda, strictly negative");
    if (config.n_values.size() < 3)
        throw std::invalid_argument("p2_decay: needs at least 3 n values");

    const double lambda = config.lambda_values.front();
    std::vector<P2DecayPoint> points;
    points.reserve(config.n_values.size());
    for (int n : config.n_values) {
        std::vector<TrialRecord> records = run_grid_point(config, n, lambda);
        int events = 0;
        for (const TrialRecord& r : records)
            if (r.two_cycle_count >= 1) ++events;
        points.push_back(P2DecayPoint{
            n, static_cast<double>(events) / static_cast<double>(config.trials), events, false});
    }
    return p2_decay_fit(std::move(points));
}

namespace {

void append_stat(std::string& out, double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    out += buf;
}

std::string lambda_str(double lambda) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", lambda);
    return buf;
}

}  // namespace

std::string summary_csv(const std::vector<SweepSummary>& summaries) {
    std::string out =
        "n,lambda,trials,mean_cycles,sem_cycles,p2_presence,sem_p2,mean_two_cycles,"
        "p_n_cycle,sem_p_n_cycle,mean_length,sem_length,ratio_p2_over_nc\n";
    for (const SweepSummary& s : summaries) {
        out += std::to_string(s.n);
        out += ',';
        out += lambda_str(s.lambda);
        out += ',';
        out += std::to_string(s.trials_used);
        for (double v : {s.mean_cycles, s.sem_cycles, s.p2_presence, s.sem_p2,
                         s.mean_two_cycles, s.p_n_cycle, s.sem_p_n_cycle, s.mean_length,
                         s.sem_length, s.ratio_p2_over_nc}) {
            out += ',';
            append_stat(out, v);
        }
        out += '\n';
    }
    return out;
}

std::string summary_json(const std::vector<SweepSummary>& summaries) {
    nlohmann::ordered_json root = nlohmann::ordered_json::array();
    for (const SweepSummary& s : summaries) {
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["lambda"] = s.lambda;
        row["trials"] = s.trials_used;
        row["mean_cycles"] = s.mean_cycles;
        row["sem_cycles"] = s.sem_cycles;
        row["p2_presence"] = s.p2_presence;
        row["sem_p2"] = s.sem_p2;
        row["mean_two_cycles"] = s.mean_two_cycles;
        row["p_n_cycle"] = s.p_n_cycle;
        row["sem_p_n_cycle"] = s.sem_p_n_cycle;
        row["mean_length"] = s.mean_length;
        row["sem_length"] = s.sem_length;
        row["ratio_p2_over_nc"] = s.ratio_p2_over_nc;
        root.push_back(std::move(row));
    }
    return root.dump(2) + "\n";
}

std::string records_csv_header() {
    return "n,lambda,trial_index,n_cycles,two_cycle_count,is_n_cycle,max_even_cycle_length,"
           "tour_length\n";
}

void append_records_csv(std::string& out, const std::vector<TrialRecord>& records) {
    char buf[32];
    for (const TrialRecord& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += lambda_str(r.lambda);
        out += ',';
        out += std::to_string(r.trial_index);
        out += ',';
        out += std::to_string(r.n_cycles);
        out += ',';
        out += std::to_string(r.two_cycle_count);
        out += ',';
        out += r.is_n_cycle ? '1' : '0';
        out += ',';
        out += std::to_string(r.max_even_cycle_length);
        out += ',';
        std::snprintf(buf, sizeof buf, "%.17g", r.tour_length);
        out += buf;
        out += '\n';
    }
}

}  // namespace apc
