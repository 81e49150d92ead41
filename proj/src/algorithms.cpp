#include "tsplab/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "tsplab/errors.hpp"
#include "tsplab/genetic_ops.hpp"
#include "tsplab/local_search.hpp"
#include "tsplab/rng.hpp"

namespace tsplab {

namespace {

struct AlgorithmInfo {
    Algorithm algorithm;
    std::string_view name;
};

constexpr AlgorithmInfo kAlgorithms[] = {
    {Algorithm::GA, "GA"},
    {Algorithm::GA_GD, "GA_GD"},
    {Algorithm::GADEGD, "GADEGD"},
    {Algorithm::GADEGD_NoGD, "GADEGD_NoGD"},
    {Algorithm::GADEGD_Elitism, "GADEGD_Elitism"},
    {Algorithm::GADEGD_Tournament, "GADEGD_Tournament"},
    {Algorithm::MA, "MA"},
    {Algorithm::MADEGD, "MADEGD"},
    {Algorithm::CHC, "CHC"},
    {Algorithm::CHC_GR, "CHC_GR"},
    {Algorithm::MicroGA, "MicroGA"},
    {Algorithm::MicroGA_GR, "MicroGA_GR"},
    {Algorithm::GRASP, "GRASP"},
    {Algorithm::IG, "IG"},
};

} // namespace

std::string_view algorithm_name(Algorithm a) {
    for (const auto& info : kAlgorithms)
        if (info.algorithm == a)
            return info.name;
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (const auto& info : kAlgorithms)
        if (info.name == name)
            return info.algorithm;
    throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view characteristic_name(Characteristic c) {
    return c == Characteristic::Identity ? "id" : "objective";
}

Characteristic parse_characteristic(std::string_view name) {
    if (name == "id")
        return Characteristic::Identity;
    if (name == "objective")
        return Characteristic::Objective;
    throw ConfigError("unknown characteristic '" + std::string(name) + "' (expected id|objective)");
}

StoppingCriterion StoppingCriterion::wall_clock(double seconds) {
    if (seconds <= 0.0)
        throw ConfigError("wall-clock budget must be positive");
    StoppingCriterion s;
    s.kind = Kind::WallClock;
    s.seconds = seconds;
    return s;
}

StoppingCriterion StoppingCriterion::generations(std::int64_t count) {
    if (count <= 0)
        throw ConfigError("generation budget must be positive");
    StoppingCriterion s;
    s.kind = Kind::Generations;
    s.count = count;
    return s;
}

StoppingCriterion StoppingCriterion::evaluations(std::int64_t count) {
    if (count <= 0)
        throw ConfigError("evaluation budget must be positive");
    StoppingCriterion s;
    s.kind = Kind::Evaluations;
    s.count = count;
    return s;
}

namespace {

// Which knobs each algorithm accepts.
struct Applicability {
    bool crossover_probs = false; // p_c, p_m
    bool sigma = false;
    bool characteristic = false;
    bool local_search = false;    // ls_neighbors, use_or_opt
    bool destruction = false;     // ig_destroy_min/max
    int default_n = 0;
    bool even_n = false;
    bool population = true;
};

Applicability applicability(Algorithm a) {
    Applicability r;
    switch (a) {
    case Algorithm::GA:
        r.crossover_probs = true;
        r.default_n = 64;
        r.even_n = true;
        break;
    case Algorithm::GA_GD:
        r.crossover_probs = true;
        r.sigma = true;
        r.characteristic = true;
        r.default_n = 64;
        r.even_n = true;
        break;
    case Algorithm::GADEGD:
    case Algorithm::GADEGD_Elitism:
    case Algorithm::GADEGD_Tournament:
        r.sigma = true;
        r.characteristic = true;
        r.default_n = 64;
        break;
    case Algorithm::GADEGD_NoGD:
        r.default_n = 64;
        break;
    case Algorithm::MA:
        r.crossover_probs = true;
        r.sigma = true;
        r.local_search = true;
        r.default_n = 16;
        r.even_n = true;
        break;
    case Algorithm::MADEGD:
        r.sigma = true;
        r.characteristic = true;
        r.local_search = true;
        r.default_n = 16;
        break;
    case Algorithm::CHC:
        r.default_n = 60;
        r.even_n = true;
        break;
    case Algorithm::CHC_GR:
        r.sigma = true;
        r.default_n = 60;
        r.even_n = true;
        break;
    case Algorithm::MicroGA:
        r.default_n = 5;
        break;
    case Algorithm::MicroGA_GR:
        r.sigma = true;
        r.default_n = 5;
        break;
    case Algorithm::GRASP:
        r.sigma = true;
        r.local_search = true;
        r.population = false;
        break;
    case Algorithm::IG:
        r.sigma = true;
        r.local_search = true;
        r.destruction = true;
        r.population = false;
        break;
    }
    return r;
}

[[noreturn]] void reject(Algorithm a, const std::string& what) {
    throw ConfigError(std::string(algorithm_name(a)) + ": " + what);
}

} // namespace

ResolvedConfig resolve_config(const AlgorithmConfig& config) {
    const Applicability rules = applicability(config.algorithm);
    ResolvedConfig r;
    r.algorithm = config.algorithm;
    r.seed = config.seed;

    if (rules.population) {
        r.population_size = config.population_size.value_or(rules.default_n);
        if (r.population_size < 2)
            reject(config.algorithm, "population size must be at least 2");
        if (rules.even_n && r.population_size % 2 != 0)
            reject(config.algorithm, "population size must be even (pairwise crossover)");
        if ((config.algorithm == Algorithm::MicroGA || config.algorithm == Algorithm::MicroGA_GR) &&
            r.population_size != 5)
            reject(config.algorithm, "uses a fixed population of 5 (elite plus four children)");
    } else if (config.population_size) {
        reject(config.algorithm, "population size is not applicable");
    }

    if (rules.crossover_probs) {
        r.p_c = config.p_c.value_or(0.7);
        r.p_m = config.p_m.value_or(0.1);
        if (r.p_c <= 0.0 || r.p_c > 1.0)
            reject(config.algorithm, "p_c must be in (0, 1]");
        if (r.p_m < 0.0 || r.p_m > 1.0)
            reject(config.algorithm, "p_m must be in [0, 1] (0 disables mutation)");
    } else {
        if (config.p_c)
            reject(config.algorithm, "p_c is not applicable (crossover is unconditional)");
        if (config.p_m)
            reject(config.algorithm, "p_m is not applicable (no mutation operator)");
        r.p_c = 1.0;
        r.p_m = 0.0;
    }

    if (rules.sigma) {
        r.sigma = config.sigma.value_or(0.1);
        if (r.sigma < 0.0)
            reject(config.algorithm, "sigma must be nonnegative");
    } else if (config.sigma) {
        reject(config.algorithm, "sigma is not applicable (no greedy construction)");
    }

    if (rules.characteristic) {
        r.characteristic = config.characteristic.value_or(Characteristic::Identity);
        if (config.algorithm == Algorithm::MADEGD && r.characteristic != Characteristic::Identity)
            reject(config.algorithm, "uses the identity characteristic");
    } else if (config.characteristic) {
        reject(config.algorithm, "characteristic is not applicable (no diversification)");
    }

    if (rules.local_search) {
        r.ls_neighbors = config.ls_neighbors.value_or(10);
        if (r.ls_neighbors < 1)
            reject(config.algorithm, "ls_neighbors must be positive");
        r.use_or_opt = config.use_or_opt.value_or(false);
    } else {
        if (config.ls_neighbors)
            reject(config.algorithm, "ls_neighbors is not applicable (no local search)");
        if (config.use_or_opt)
            reject(config.algorithm, "use_or_opt is not applicable (no local search)");
    }

    if (rules.destruction) {
        r.ig_destroy_min = config.ig_destroy_min.value_or(0.1);
        r.ig_destroy_max = config.ig_destroy_max.value_or(0.3);
        if (r.ig_destroy_min <= 0.0 || r.ig_destroy_max >= 1.0 ||
            r.ig_destroy_min > r.ig_destroy_max)
            reject(config.algorithm, "destruction fractions must satisfy 0 < min <= max < 1");
    } else if (config.ig_destroy_min || config.ig_destroy_max) {
        reject(config.algorithm, "destruction fractions apply to IG only");
    }

    return r;
}

// ---------------------------------------------------------------------------
// Shared runner state
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

class RunState {
  public:
    RunState(const Instance& instance, const ResolvedConfig& cfg, const StoppingCriterion& stop,
             const TraceOptions& trace_options)
        : inst(instance), cfg(cfg), stop(stop), rng(cfg.seed),
          diversity_rng(splitmix64(cfg.seed ^ 0x5bf0374c1ull)), start_(Clock::now()),
          wall_trace_(stop.kind == StoppingCriterion::Kind::WallClock),
          trace_(trace_options.enabled,
                 wall_trace_ ? trace_options.window : 1.0),
          pair_cap_(trace_options.diversity_pair_cap) {
        result.best.cost = std::numeric_limits<std::int64_t>::max();
    }

    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start_).count();
    }

    bool should_stop() {
        if (stop_now_)
            return true;
        switch (stop.kind) {
        case StoppingCriterion::Kind::WallClock:
            return elapsed() >= stop.seconds;
        case StoppingCriterion::Kind::Generations:
            return result.iterations >= stop.count;
        case StoppingCriterion::Kind::Evaluations:
            return result.generated_solutions >= stop.count;
        }
        return true;
    }

    // Track the best-ever tour; called on every newly evaluated tour.
    void observe(const Tour& t) {
        if (t.cost < result.best.cost) {
            result.best = t;
            if (stop.target_cost && t.cost <= *stop.target_cost && !result.time_to_target) {
                result.time_to_target = elapsed();
                if (stop.stop_at_target)
                    stop_now_ = true;
            }
        }
    }

    Tour new_random_tour() {
        ++result.generated_solutions;
        Tour t = random_tour(inst, rng);
        observe(t);
        return t;
    }

    Tour new_greedy_tour() {
        ++result.generated_solutions;
        Tour t = greedy_randomized_tour(inst, {cfg.sigma}, rng);
        observe(t);
        return t;
    }

    Population random_population() {
        Population pop;
        pop.members.reserve(cfg.population_size);
        for (int i = 0; i < cfg.population_size; ++i)
            pop.members.push_back(new_random_tour());
        pop.improved.assign(cfg.population_size, false);
        return pop;
    }

    Population greedy_population() {
        Population pop;
        pop.members.reserve(cfg.population_size);
        for (int i = 0; i < cfg.population_size; ++i)
            pop.members.push_back(new_greedy_tour());
        pop.improved.assign(cfg.population_size, false);
        return pop;
    }

    void apply_diversification(Population& pop) {
        DiversificationResult div =
            greedy_diversification(pop, cfg.characteristic, inst, {cfg.sigma}, rng);
        result.gd_solutions += div.num_replaced;
        result.generated_solutions += div.num_replaced;
        const int n = div.population.size();
        for (int i = n - div.num_replaced; i < n; ++i)
            observe(div.population.members[i]);
        pop = std::move(div.population);
    }

    // Local search on the best not-yet-improved member, if any.
    void memetic_step(Population& pop, const NeighborLists& nl) {
        int target = -1;
        for (int i = 0; i < pop.size(); ++i) {
            if (pop.improved[i])
                continue;
            if (target < 0 || pop.members[i].cost < pop.members[target].cost)
                target = i;
        }
        if (target < 0)
            return;
        ++result.ls_calls;
        ++result.ls_applied_iterations;
        Tour improved = two_opt(inst, pop.members[target], nl, {cfg.use_or_opt});
        observe(improved);
        pop.members[target] = std::move(improved);
        pop.improved[target] = true;
    }

    void record_trace(const Population* pop) {
        if (!trace_.enabled())
            return;
        double diversity = 0.0;
        if (pop && pop->size() >= 2) {
            const std::int64_t pairs =
                static_cast<std::int64_t>(pop->size()) * (pop->size() - 1);
            if (inst.num_cities() > 300 && pairs > pair_cap_) {
                diversity = population_diversity_sampled(*pop, pair_cap_, diversity_rng);
                trace_.set_subsampled(pair_cap_);
            } else {
                diversity = population_diversity(*pop);
            }
        }
        const double t = wall_trace_ ? elapsed() : static_cast<double>(result.iterations);
        trace_.record(t, result.best.cost, diversity);
    }

    void end_iteration(const Population* pop) {
        ++result.iterations;
        record_trace(pop);
    }

    RunResult take_result() {
        result.trace = trace_.finish();
        return std::move(result);
    }

    const Instance& inst;
    const ResolvedConfig& cfg;
    const StoppingCriterion& stop;
    Rng rng;
    Rng diversity_rng;
    RunResult result;

  private:
    Clock::time_point start_;
    bool wall_trace_;
    TraceRecorder trace_;
    int pair_cap_;
    bool stop_now_ = false;
};

int clamped_neighbors(const ResolvedConfig& cfg, const Instance& inst) {
    return std::min(cfg.ls_neighbors, inst.num_cities() - 1);
}

// Index of the best member; ties resolve to the lowest index.
int best_index(const Population& pop) {
    int best = 0;
    for (int i = 1; i < pop.size(); ++i)
        if (pop.members[i].cost < pop.members[best].cost)
            best = i;
    return best;
}

Population ga_generation(RunState& st, const Population& pop) {
    const int n = pop.size();
    const int old_best = best_index(pop);
    const Tour elite = pop.members[old_best];
    const bool elite_improved = pop.improved[old_best];

    Population next;
    next.members.reserve(n);
    next.improved.reserve(n);
    for (int pair = 0; pair < n / 2; ++pair) {
        const int a = binary_tournament(pop, st.rng);
        const int b = binary_tournament(pop, st.rng);
        if (st.rng.bernoulli(st.cfg.p_c)) {
            for (const auto& [left, right] : {std::pair(a, b), std::pair(b, a)}) {
                Tour child = ox_crossover(st.inst, pop.members[left], pop.members[right], st.rng);
                ++st.result.generated_solutions;
                st.observe(child);
                next.members.push_back(std::move(child));
                next.improved.push_back(false);
            }
        } else {
            for (int parent : {a, b}) {
                next.members.push_back(pop.members[parent]);
                next.improved.push_back(pop.improved[parent]);
            }
        }
    }

    if (st.cfg.p_m > 0.0) {
        for (int i = 0; i < n; ++i) {
            if (!st.rng.bernoulli(st.cfg.p_m))
                continue;
            next.members[i] = exchange_mutation(st.inst, next.members[i], st.rng);
            next.improved[i] = false;
            ++st.result.generated_solutions;
            st.observe(next.members[i]);
        }
    }

    apply_elitism(next, elite, elite_improved);
    return next;
}

Population gadegd_generation(RunState& st, const Population& pop) {
    Population next;
    const int n = pop.size();
    next.members.reserve(n);
    next.improved.reserve(n);
    for (const auto& [left, right] : randomized_adjacent_pairs(pop, st.rng)) {
        // The child keeps the left parent's city order around a segment
        // donated by the right parent, then competes against the left
        // parent it mostly descends from (differential-evolution style).
        Tour child = ox_crossover(st.inst, pop.members[right], pop.members[left], st.rng);
        ++st.result.generated_solutions;
        st.observe(child);
        if (child.cost < pop.members[left].cost) {
            next.members.push_back(std::move(child));
            next.improved.push_back(false);
        } else {
            next.members.push_back(pop.members[left]);
            next.improved.push_back(pop.improved[left]);
        }
    }
    return next;
}

// ---------------------------------------------------------------------------
// Runners
// ---------------------------------------------------------------------------

RunResult run_ga_impl(const Instance& inst, const ResolvedConfig& cfg,
                      const StoppingCriterion& stop, const TraceOptions& trace,
                      bool with_diversification) {
    RunState st(inst, cfg, stop, trace);
    Population pop = st.random_population();
    st.record_trace(&pop);
    while (!st.should_stop()) {
        pop = ga_generation(st, pop);
        if (with_diversification)
            st.apply_diversification(pop);
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_gadegd_impl(const Instance& inst, const ResolvedConfig& cfg,
                          const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    Population pop = st.random_population();
    st.record_trace(&pop);
    const bool diversify = cfg.algorithm != Algorithm::GADEGD_NoGD;
    while (!st.should_stop()) {
        pop = gadegd_generation(st, pop);
        if (diversify)
            st.apply_diversification(pop);
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_gadegd_variant_impl(const Instance& inst, const ResolvedConfig& cfg,
                                  const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    Population pop = st.random_population();
    st.record_trace(&pop);
    const bool with_elitism = cfg.algorithm == Algorithm::GADEGD_Elitism;
    while (!st.should_stop()) {
        Population next;
        next.members.reserve(pop.size());
        next.improved.assign(pop.size(), false);
        if (with_elitism) {
            // Children always replace parents; the old best is restored by
            // standard elitism afterwards.
            const Tour elite = pop.members[best_index(pop)];
            for (const auto& [left, right] : randomized_adjacent_pairs(pop, st.rng)) {
                Tour child = ox_crossover(st.inst, pop.members[right], pop.members[left], st.rng);
                ++st.result.generated_solutions;
                st.observe(child);
                next.members.push_back(std::move(child));
            }
            apply_elitism(next, elite);
        } else {
            // Tournament selection for both parents; competition retained.
            for (int i = 0; i < pop.size(); ++i) {
                const int left = binary_tournament(pop, st.rng);
                const int right = binary_tournament(pop, st.rng);
                Tour child = ox_crossover(st.inst, pop.members[right], pop.members[left], st.rng);
                ++st.result.generated_solutions;
                st.observe(child);
                next.members.push_back(child.cost < pop.members[left].cost
                                           ? std::move(child)
                                           : pop.members[left]);
            }
        }
        st.apply_diversification(next);
        pop = std::move(next);
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_memetic_impl(const Instance& inst, const ResolvedConfig& cfg,
                           const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    const NeighborLists nl = build_neighbor_lists(inst, clamped_neighbors(cfg, inst));
    Population pop = st.greedy_population();
    st.record_trace(&pop);
    const bool gadegd_core = cfg.algorithm == Algorithm::MADEGD;
    while (!st.should_stop()) {
        if (gadegd_core) {
            pop = gadegd_generation(st, pop);
            st.apply_diversification(pop);
        } else {
            pop = ga_generation(st, pop);
        }
        st.memetic_step(pop, nl);
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_chc_impl(const Instance& inst, const ResolvedConfig& cfg,
                       const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    Population pop = st.random_population();
    st.record_trace(&pop);
    const int initial_threshold = inst.num_cities() / 4;
    int threshold = initial_threshold;
    const bool greedy_reinit = cfg.algorithm == Algorithm::CHC_GR;
    std::vector<int> perm(pop.size());

    while (!st.should_stop()) {
        const int n = pop.size();
        std::iota(perm.begin(), perm.end(), 0);
        st.rng.shuffle(perm);

        // Random pairing; incest prevention blocks similar parents.
        std::vector<Tour> children;
        for (int pair = 0; pair + 1 < n; pair += 2) {
            const Tour& p1 = pop.members[perm[pair]];
            const Tour& p2 = pop.members[perm[pair + 1]];
            if (edge_distance(p1, p2) > 2 * threshold) {
                for (const Tour* left : {&p1, &p2}) {
                    const Tour* right = left == &p1 ? &p2 : &p1;
                    Tour child = ox_crossover(st.inst, *left, *right, st.rng);
                    ++st.result.generated_solutions;
                    st.observe(child);
                    children.push_back(std::move(child));
                }
            }
        }

        // Survivor selection: best n of parents plus children; ties favor
        // parents (stable sort over the parents-first layout).
        std::vector<int> union_idx(n + static_cast<int>(children.size()));
        std::iota(union_idx.begin(), union_idx.end(), 0);
        auto cost_of = [&](int idx) {
            return idx < n ? pop.members[idx].cost : children[idx - n].cost;
        };
        std::stable_sort(union_idx.begin(), union_idx.end(),
                         [&](int a, int b) { return cost_of(a) < cost_of(b); });

        Population next;
        next.members.reserve(n);
        next.improved.assign(n, false);
        bool child_entered = false;
        for (int i = 0; i < n; ++i) {
            const int idx = union_idx[i];
            if (idx < n) {
                next.members.push_back(pop.members[idx]);
            } else {
                next.members.push_back(std::move(children[idx - n]));
                child_entered = true;
            }
        }
        pop = std::move(next);

        if (!child_entered)
            --threshold;
        if (threshold < 0) {
            // Converged: keep the best, rebuild the rest.
            const Tour best = pop.members[best_index(pop)];
            pop.members.clear();
            pop.members.push_back(best);
            for (int i = 1; i < n; ++i)
                pop.members.push_back(greedy_reinit ? st.new_greedy_tour() : st.new_random_tour());
            threshold = initial_threshold;
        }
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_micro_ga_impl(const Instance& inst, const ResolvedConfig& cfg,
                            const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    Population pop = st.random_population();
    st.record_trace(&pop);
    const bool greedy_reinit = cfg.algorithm == Algorithm::MicroGA_GR;

    while (!st.should_stop()) {
        Population next;
        next.members.reserve(pop.size());
        next.improved.assign(pop.size(), false);
        next.members.push_back(pop.members[best_index(pop)]);
        for (int pair = 0; pair < 2; ++pair) {
            const int a = binary_tournament(pop, st.rng);
            const int b = binary_tournament(pop, st.rng);
            for (const auto& [left, right] : {std::pair(a, b), std::pair(b, a)}) {
                Tour child = ox_crossover(st.inst, pop.members[left], pop.members[right], st.rng);
                ++st.result.generated_solutions;
                st.observe(child);
                next.members.push_back(std::move(child));
            }
        }
        pop = std::move(next);

        if (detail::population_converged(pop)) {
            const Tour best = pop.members[best_index(pop)];
            pop.members.clear();
            pop.members.push_back(best);
            while (pop.size() < cfg.population_size)
                pop.members.push_back(greedy_reinit ? st.new_greedy_tour() : st.new_random_tour());
        }
        st.end_iteration(&pop);
    }
    return st.take_result();
}

RunResult run_grasp_impl(const Instance& inst, const ResolvedConfig& cfg,
                         const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    const NeighborLists nl = build_neighbor_lists(inst, clamped_neighbors(cfg, inst));
    while (!st.should_stop()) {
        Tour greedy = st.new_greedy_tour();
        Tour improved = two_opt(inst, greedy, nl, {cfg.use_or_opt});
        ++st.result.ls_calls;
        ++st.result.ls_applied_iterations;
        st.observe(improved);
        st.end_iteration(nullptr);
    }
    return st.take_result();
}

RunResult run_ig_impl(const Instance& inst, const ResolvedConfig& cfg,
                      const StoppingCriterion& stop, const TraceOptions& trace) {
    RunState st(inst, cfg, stop, trace);
    const int m = inst.num_cities();
    const NeighborLists nl = build_neighbor_lists(inst, clamped_neighbors(cfg, inst));

    Tour current = two_opt(inst, st.new_greedy_tour(), nl, {cfg.use_or_opt});
    ++st.result.ls_calls;
    st.observe(current);
    st.record_trace(nullptr);

    const int len_min = std::max<int>(1, static_cast<int>(std::ceil(cfg.ig_destroy_min * m)));
    const int len_max = std::min<int>(
        m - 1, std::max<int>(len_min, static_cast<int>(std::ceil(cfg.ig_destroy_max * m))));

    while (!st.should_stop()) {
        const int length = st.rng.uniform_int(len_min, len_max);
        const int position = st.rng.uniform_int(0, m - 1);
        const std::vector<int> partial = detail::ig_destroy(current.order, position, length);
        Tour rebuilt = greedy_complete_path(inst, partial, {cfg.sigma}, st.rng);
        ++st.result.generated_solutions;
        st.observe(rebuilt);
        Tour improved = two_opt(inst, rebuilt, nl, {cfg.use_or_opt});
        ++st.result.ls_calls;
        ++st.result.ls_applied_iterations;
        st.observe(improved);
        if (improved.cost < current.cost)
            current = std::move(improved);
        st.end_iteration(nullptr);
    }
    return st.take_result();
}

RunResult dispatch(const Instance& inst, const ResolvedConfig& cfg, const StoppingCriterion& stop,
                   const TraceOptions& trace) {
    switch (cfg.algorithm) {
    case Algorithm::GA:
        return run_ga_impl(inst, cfg, stop, trace, false);
    case Algorithm::GA_GD:
        return run_ga_impl(inst, cfg, stop, trace, true);
    case Algorithm::GADEGD:
    case Algorithm::GADEGD_NoGD:
        return run_gadegd_impl(inst, cfg, stop, trace);
    case Algorithm::GADEGD_Elitism:
    case Algorithm::GADEGD_Tournament:
        return run_gadegd_variant_impl(inst, cfg, stop, trace);
    case Algorithm::MA:
    case Algorithm::MADEGD:
        return run_memetic_impl(inst, cfg, stop, trace);
    case Algorithm::CHC:
    case Algorithm::CHC_GR:
        return run_chc_impl(inst, cfg, stop, trace);
    case Algorithm::MicroGA:
    case Algorithm::MicroGA_GR:
        return run_micro_ga_impl(inst, cfg, stop, trace);
    case Algorithm::GRASP:
        return run_grasp_impl(inst, cfg, stop, trace);
    case Algorithm::IG:
        return run_ig_impl(inst, cfg, stop, trace);
    }
    throw ConfigError("unknown algorithm selector");
}

void require_algorithm(const AlgorithmConfig& config, std::initializer_list<Algorithm> allowed) {
    for (Algorithm a : allowed)
        if (config.algorithm == a)
            return;
    throw ConfigError("runner does not handle algorithm '" +
                      std::string(algorithm_name(config.algorithm)) + "'");
}

} // namespace

RunResult run(const Instance& inst, const AlgorithmConfig& config, const StoppingCriterion& stop,
              const TraceOptions& trace) {
    return dispatch(inst, resolve_config(config), stop, trace);
}

RunResult run_ga(const Instance& inst, const AlgorithmConfig& config,
                 const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::GA});
    return run(inst, config, stop, trace);
}

RunResult run_ga_gd(const Instance& inst, const AlgorithmConfig& config,
                    const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::GA_GD});
    return run(inst, config, stop, trace);
}

RunResult run_gadegd(const Instance& inst, const AlgorithmConfig& config,
                     const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::GADEGD, Algorithm::GADEGD_NoGD});
    return run(inst, config, stop, trace);
}

RunResult run_gadegd_variant(const Instance& inst, const AlgorithmConfig& config,
                             const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::GADEGD_Elitism, Algorithm::GADEGD_Tournament});
    return run(inst, config, stop, trace);
}

RunResult run_ma(const Instance& inst, const AlgorithmConfig& config,
                 const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::MA});
    return run(inst, config, stop, trace);
}

RunResult run_madegd(const Instance& inst, const AlgorithmConfig& config,
                     const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::MADEGD});
    return run(inst, config, stop, trace);
}

RunResult run_chc(const Instance& inst, const AlgorithmConfig& config,
                  const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::CHC, Algorithm::CHC_GR});
    return run(inst, config, stop, trace);
}

RunResult run_micro_ga(const Instance& inst, const AlgorithmConfig& config,
                       const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::MicroGA, Algorithm::MicroGA_GR});
    return run(inst, config, stop, trace);
}

RunResult run_grasp(const Instance& inst, const AlgorithmConfig& config,
                    const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::GRASP});
    return run(inst, config, stop, trace);
}

RunResult run_ig(const Instance& inst, const AlgorithmConfig& config,
                 const StoppingCriterion& stop, const TraceOptions& trace) {
    require_algorithm(config, {Algorithm::IG});
    return run(inst, config, stop, trace);
}

namespace detail {

Population ga_build_step(const Instance& instance, const Population& pop, double p_c, double p_m,
                         Rng& rng, std::int64_t* generated) {
    ResolvedConfig cfg;
    cfg.algorithm = Algorithm::GA;
    cfg.population_size = pop.size();
    cfg.p_c = p_c;
    cfg.p_m = p_m;
    StoppingCriterion stop = StoppingCriterion::generations(1);
    RunState st(instance, cfg, stop, {});
    st.rng = rng;
    Population next = ga_generation(st, pop);
    rng = st.rng;
    if (generated)
        *generated += st.result.generated_solutions;
    return next;
}

Population gadegd_build_step(const Instance& instance, const Population& pop, Rng& rng,
                             std::int64_t* generated) {
    ResolvedConfig cfg;
    cfg.algorithm = Algorithm::GADEGD;
    cfg.population_size = pop.size();
    StoppingCriterion stop = StoppingCriterion::generations(1);
    RunState st(instance, cfg, stop, {});
    st.rng = rng;
    Population next = gadegd_generation(st, pop);
    rng = st.rng;
    if (generated)
        *generated += st.result.generated_solutions;
    return next;
}

bool population_converged(const Population& pop) {
    for (int i = 1; i < pop.size(); ++i)
        if (pop.members[i].cost != pop.members[0].cost)
            return false;
    return true;
}

std::vector<int> ig_destroy(const std::vector<int>& order, int position, int length) {
    const int m = static_cast<int>(order.size());
    assert(length >= 1 && length < m);
    assert(position >= 0 && position < m);
    std::vector<int> partial;
    partial.reserve(m - length);
    for (int i = 0; i < m - length; ++i)
        partial.push_back(order[(position + length + i) % m]);
    return partial;
}

} // namespace detail

} // namespace tsplab
