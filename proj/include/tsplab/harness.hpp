#pragma once

/// @file harness.hpp
/// @brief Experiment definition, replicated execution, statistics and
/// table generation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsplab/algorithms.hpp"

namespace tsplab {

/// How the per-run budget is derived from the instance.
struct BudgetRule {
    enum class Kind { PerCityRate, FixedSeconds, Generations };

    Kind kind = Kind::PerCityRate;
    double seconds_per_city = 0.1;
    double seconds = 0.0;
    std::int64_t generation_count = 0;

    static BudgetRule per_city_rate(double seconds_per_city = 0.1);
    static BudgetRule fixed_seconds(double seconds);
    static BudgetRule generations(std::int64_t count);

    StoppingCriterion to_criterion(const Instance& instance) const;
};

struct ExperimentSpec {
    std::vector<std::string> instances; // .tsp file paths
    std::vector<AlgorithmConfig> algorithms;
    BudgetRule budget;
    int replicates = 30;
    std::uint64_t base_seed = 1;
    double trace_window = 0.01; // seconds
    std::string traces_dir;    // empty: do not persist traces
    int jobs = 1;              // concurrent replicates
};

/// One replicate's outcome, persisted for independent re-aggregation.
struct RunRecord {
    std::string instance;
    std::string algorithm;
    int replicate = 0;
    std::uint64_t seed = 0;
    std::int64_t best_cost = 0;
    std::int64_t generated_solutions = 0;
    std::int64_t gd_solutions = 0;
    std::int64_t ls_calls = 0;
    std::int64_t ls_applied_iterations = 0;
    std::int64_t iterations = 0;
    std::optional<double> time_to_optimum;
};

struct SummaryRow {
    std::string instance;
    std::optional<std::int64_t> optimum;
    std::string algorithm;
    double mean_cost = 0.0;
    double stddev_cost = 0.0; // population form, divisor N
    std::int64_t best_cost = 0;
    std::optional<double> gap_pct; // 100 * (mean - optimum) / optimum
    double mean_generated = 0.0;
    double gd_pct = 0.0;         // mean of per-run 100 * gd / generated
    double mean_ls_calls = 0.0;
    double ls_applied_pct = 0.0; // mean of per-run 100 * applied / iterations
    int opt_hits = 0;
    std::optional<double> mean_time_to_opt; // over hits
};

struct ExperimentResult {
    std::vector<SummaryRow> rows;
    std::vector<RunRecord> runs;
    std::vector<std::string> errors; // per-cell failures, experiment continues
};

/// Deterministic replicate seed: a splitmix64 chain over the base seed and
/// the (instance, algorithm, replicate) indices.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t instance_index,
                          std::uint64_t algorithm_index, std::uint64_t replicate);

/// Execute every (instance, algorithm, replicate) cell and aggregate one
/// SummaryRow per (instance, algorithm). A failing cell is recorded in
/// `errors` and skipped.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct TimeToOptimum {
    int hits = 0;
    double mean_seconds = 0.0; // over hits
};

/// Replicated runs that stop at the first evaluation reaching the known
/// optimum; replicates that never reach it within cap_seconds are misses.
/// Throws ConfigError when the instance has no known optimum.
TimeToOptimum time_to_optimum(const Instance& instance, const AlgorithmConfig& config,
                              double cap_seconds, int replicates, int jobs = 1);

/// CSV with header "elapsed_s,best_cost,diversity", one row per window,
/// floats with 6 significant digits. Throws ParseError on I/O failure.
void emit_trace_csv(const RunTrace& trace, const std::string& path);

enum class SummaryFormat { Csv, Json, Markdown };

std::string format_summary(const std::vector<SummaryRow>& rows, SummaryFormat format);
void emit_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                  const std::string& path);

/// Inverse of the JSON summary encoding.
std::vector<SummaryRow> summary_from_json(const std::string& text);

/// Per-run records as CSV (the persisted form re-aggregation reads).
std::string format_run_records(const std::vector<RunRecord>& runs);

/// Load an ExperimentSpec from a JSON file; key names are documented in
/// the README. Throws ParseError / ConfigError on invalid content.
ExperimentSpec load_experiment_spec(const std::string& path);

} // namespace tsplab
