#pragma once

/// @file algorithms.hpp
/// @brief Every end-to-end metaheuristic as a uniformly shaped runner:
/// seeded, budgeted, trace-emitting.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "tsplab/diversification.hpp"
#include "tsplab/tour.hpp"
#include "tsplab/trace.hpp"

namespace tsplab {

class Rng;

enum class Algorithm {
    GA,
    GA_GD,
    GADEGD,
    GADEGD_NoGD,
    GADEGD_Elitism,
    GADEGD_Tournament,
    MA,
    MADEGD,
    CHC,
    CHC_GR,
    MicroGA,
    MicroGA_GR,
    GRASP,
    IG,
};

std::string_view algorithm_name(Algorithm a);
/// Throws ConfigError for unknown names.
Algorithm parse_algorithm(std::string_view name);

std::string_view characteristic_name(Characteristic c);
Characteristic parse_characteristic(std::string_view name);

/// Run budget. Wall-clock budgets are checked once per generation (per
/// construction for GRASP/IG), so overshoot is at most one iteration.
/// Optionally a target cost is watched: the first evaluation reaching it
/// is timestamped, and ends the run when stop_at_target is set.
struct StoppingCriterion {
    enum class Kind { WallClock, Generations, Evaluations };

    Kind kind = Kind::WallClock;
    double seconds = 0.0;
    std::int64_t count = 0;
    std::optional<std::int64_t> target_cost;
    bool stop_at_target = false;

    static StoppingCriterion wall_clock(double seconds);
    static StoppingCriterion generations(std::int64_t count);
    static StoppingCriterion evaluations(std::int64_t count);
};

/// Algorithm selector plus tunables. Every optional is validated for
/// applicability: setting a knob the selected algorithm does not use is a
/// ConfigError, and unset knobs take the algorithm's published default.
struct AlgorithmConfig {
    Algorithm algorithm = Algorithm::GADEGD;
    std::optional<int> population_size;
    std::optional<double> p_c;        // crossover probability
    std::optional<double> p_m;        // mutation probability (0 disables)
    std::optional<double> sigma;      // RCL width
    std::optional<Characteristic> characteristic;
    std::optional<int> ls_neighbors;  // candidate list size for 2-opt
    std::optional<bool> use_or_opt;
    std::optional<double> ig_destroy_min; // destruction length fractions
    std::optional<double> ig_destroy_max;
    std::uint64_t seed = 1;
};

/// AlgorithmConfig with defaults applied and applicability checked.
struct ResolvedConfig {
    Algorithm algorithm;
    int population_size = 0;
    double p_c = 0.0;
    double p_m = 0.0;
    double sigma = 0.0;
    Characteristic characteristic = Characteristic::Identity;
    int ls_neighbors = 0;
    bool use_or_opt = false;
    double ig_destroy_min = 0.0;
    double ig_destroy_max = 0.0;
    std::uint64_t seed = 1;
};

/// Validate and fill defaults; throws ConfigError on any mismatch.
ResolvedConfig resolve_config(const AlgorithmConfig& config);

struct RunResult {
    Tour best;
    std::int64_t generated_solutions = 0; // evaluations of newly built tours
    std::int64_t gd_solutions = 0;        // built inside greedy diversification
    std::int64_t ls_calls = 0;
    std::int64_t ls_applied_iterations = 0;
    std::int64_t iterations = 0;
    std::optional<double> time_to_target; // seconds to first target hit
    RunTrace trace;
};

/// Dispatch on config.algorithm. Identical (instance, config, generation
/// or evaluation budget) inputs produce identical results; wall-clock
/// budgets are nondeterministic in iteration count only.
RunResult run(const Instance& instance, const AlgorithmConfig& config,
              const StoppingCriterion& stop, const TraceOptions& trace = {});

RunResult run_ga(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                 const TraceOptions& = {});
RunResult run_ga_gd(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                    const TraceOptions& = {});
RunResult run_gadegd(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                     const TraceOptions& = {});
RunResult run_gadegd_variant(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                             const TraceOptions& = {});
RunResult run_ma(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                 const TraceOptions& = {});
RunResult run_madegd(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                     const TraceOptions& = {});
RunResult run_chc(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                  const TraceOptions& = {});
RunResult run_micro_ga(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                       const TraceOptions& = {});
RunResult run_grasp(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                    const TraceOptions& = {});
RunResult run_ig(const Instance&, const AlgorithmConfig&, const StoppingCriterion&,
                 const TraceOptions& = {});

namespace detail {

/// One Alg.-1-style generation: tournament pairs, crossover with p_c,
/// per-member mutation with p_m, elitism. Exposed for tests.
Population ga_build_step(const Instance& instance, const Population& pop, double p_c, double p_m,
                         Rng& rng, std::int64_t* generated = nullptr);

/// One GADEGD generation: randomized adjacent pairs, one child per pair,
/// parent-child competition.
Population gadegd_build_step(const Instance& instance, const Population& pop, Rng& rng,
                             std::int64_t* generated = nullptr);

/// All members share one objective value.
bool population_converged(const Population& pop);

/// Remove a closed, cyclic window of `length` cities starting at
/// `position` from the visit order; returns the surviving open path.
std::vector<int> ig_destroy(const std::vector<int>& order, int position, int length);

} // namespace detail

} // namespace tsplab
