// Acceptance suite: quantitative reproduction checks at desk scale plus
// the fast invariant battery. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "tsplab/construction.hpp"
#include "tsplab/errors.hpp"
#include "tsplab/diversification.hpp"
#include "tsplab/genetic_ops.hpp"
#include "tsplab/harness.hpp"
#include "tsplab/local_search.hpp"
#include "tsplab/rng.hpp"

using namespace tsplab;

namespace {

struct Cell {
    SummaryRow row;
    std::vector<RunRecord> runs;
};

class Acceptance {
  public:
    explicit Acceptance(int jobs) : jobs_(jobs) {}

    int failures() const { return failures_; }

    void report(int id, bool ok, const std::string& details) {
        std::printf("criterion %2d [%s] %s\n", id, ok ? "PASS" : "FAIL", details.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures_;
    }

    // Paper protocol cell: 0.1*m seconds per run, replicated; memoized so
    // criteria can share runs.
    const Cell& cell(const std::string& file, Algorithm algorithm, int replicates) {
        const std::string key =
            file + "/" + std::string(algorithm_name(algorithm)) + "/" + std::to_string(replicates);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;

        ExperimentSpec spec;
        spec.instances = {testutil::data_path(file)};
        AlgorithmConfig config;
        config.algorithm = algorithm;
        spec.algorithms = {config};
        spec.budget = BudgetRule::per_city_rate(0.1);
        spec.replicates = replicates;
        spec.base_seed = 20240915;
        spec.jobs = jobs_;
        ExperimentResult result = run_experiment(spec);
        if (!result.errors.empty())
            throw ConfigError("acceptance cell failed: " + result.errors.front());
        Cell entry{result.rows.front(), std::move(result.runs)};
        return cache_.emplace(key, std::move(entry)).first->second;
    }

    double mean(const std::string& file, Algorithm algorithm, int replicates = 10) {
        return cell(file, algorithm, replicates).row.mean_cost;
    }

  private:
    int jobs_;
    int failures_ = 0;
    std::map<std::string, Cell> cache_;
};

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// --- criterion 1 & 5 -------------------------------------------------------

void criterion_1_and_5(Acceptance& acc) {
    const Cell& c = acc.cell("berlin52.tsp", Algorithm::GADEGD, 30);
    const double mean = c.row.mean_cost;
    const double gap = 100.0 * (mean - 7542.0) / 7542.0;
    acc.report(1, mean <= 7542.0 * 1.02 && mean >= 7542.0,
               fmt("GADEGD berlin52 30x5.2s: mean %.2f (gap %.3f%%, stddev %.2f) within 2%% of 7542",
                   mean, gap, c.row.stddev_cost));

    const double gd_pct = c.row.gd_pct;
    acc.report(5, gd_pct >= 1.0 && gd_pct <= 15.0,
               fmt("greedy diversification generated %.2f%% of solutions (expected 1..15%%)",
                   gd_pct));
}

// --- criterion 2 ------------------------------------------------------------

void criterion_2(Acceptance& acc) {
    const std::vector<std::string> files = {"eil51.tsp", "berlin52.tsp", "st70.tsp", "eil76.tsp",
                                            "pr76.tsp"};
    bool ok = true;
    std::string detail = "GADEGD vs GA means:";
    for (const std::string& file : files) {
        const double gadegd = acc.mean(file, Algorithm::GADEGD);
        const double ga = acc.mean(file, Algorithm::GA);
        ok = ok && gadegd < ga;
        detail += fmt(" %s %.1f/%.1f", file.substr(0, file.size() - 4).c_str(), gadegd, ga);
    }
    acc.report(2, ok, detail);
}

// --- criterion 3 ------------------------------------------------------------

void criterion_3(Acceptance& acc, int jobs) {
    bool ok = true;
    std::string detail = "ablations:";
    for (const std::string& file : {std::string("eil51.tsp"), std::string("berlin52.tsp")}) {
        const double base = acc.mean(file, Algorithm::GADEGD);
        const double tournament = acc.mean(file, Algorithm::GADEGD_Tournament);
        const double elitism = acc.mean(file, Algorithm::GADEGD_Elitism);
        const double no_gd = acc.mean(file, Algorithm::GADEGD_NoGD);
        const bool here = base < tournament && base < elitism && base <= 0.9 * no_gd;
        ok = ok && here;
        detail += fmt(" %s[base %.1f, tour %.1f, elit %.1f, noGD %.1f]",
                      file.substr(0, file.size() - 4).c_str(), base, tournament, elitism, no_gd);
    }
    acc.report(3, ok, detail);

    if (!ok) {
        // Diagnostic at the reference evaluation scale: the reference eil51
        // protocol generated ~1.69M solutions per execution. Faster hardware
        // runs many more generations per wall second, which lifts the
        // no-diversification ablation well above its reference level.
        const Instance inst = testutil::load_data_instance("eil51.tsp");
        StoppingCriterion stop = StoppingCriterion::evaluations(1690000);
        auto mean_at_scale = [&](Algorithm a) {
            double sum = 0.0;
            std::vector<double> costs(10);
            for (int r = 0; r < 10; ++r) {
                AlgorithmConfig config;
                config.algorithm = a;
                config.seed = derive_seed(424242, 0, static_cast<int>(a), r);
                costs[r] = static_cast<double>(run(inst, config, stop).best.cost);
            }
            for (double c : costs)
                sum += c / 10.0;
            return sum;
        };
        const double base = mean_at_scale(Algorithm::GADEGD);
        const double no_gd = mean_at_scale(Algorithm::GADEGD_NoGD);
        std::printf("             note: at the reference scale of 1.69M evaluations, eil51 "
                    "GADEGD %.1f vs NoGD %.1f (margin %.1f%%)\n",
                    base, no_gd, 100.0 * (no_gd - base) / no_gd);
        (void)jobs;
    }
}

// --- criterion 4 ------------------------------------------------------------

void criterion_4(Acceptance& acc) {
    bool ok = true;
    std::string detail = "greedy reinitialization:";
    for (const std::string& file :
         {std::string("eil51.tsp"), std::string("berlin52.tsp"), std::string("kroA100.tsp")}) {
        const double chc = acc.mean(file, Algorithm::CHC);
        const double chc_gr = acc.mean(file, Algorithm::CHC_GR);
        const double micro = acc.mean(file, Algorithm::MicroGA);
        const double micro_gr = acc.mean(file, Algorithm::MicroGA_GR);
        const bool here = chc_gr < chc && micro_gr < micro;
        ok = ok && here;
        detail += fmt(" %s[CHC %.0f>%.0f, Micro %.0f>%.0f]",
                      file.substr(0, file.size() - 4).c_str(), chc, chc_gr, micro, micro_gr);
    }
    acc.report(4, ok, detail);
}

// --- criterion 6 ------------------------------------------------------------

void criterion_6(Acceptance& acc) {
    const Instance inst = testutil::load_data_instance("berlin52.tsp");
    const double budget = 0.1 * inst.num_cities();
    TraceOptions trace;
    trace.enabled = true;

    auto final_window_mean = [&](const RunTrace& t, double from) {
        double sum = 0.0;
        int count = 0;
        for (const TraceSample& s : t.samples)
            if (s.elapsed_s >= from) {
                sum += s.diversity;
                ++count;
            }
        return count > 0 ? sum / count : 0.0;
    };

    AlgorithmConfig ga;
    ga.algorithm = Algorithm::GA;
    ga.seed = 7;
    const RunResult ga_run = run(inst, ga, StoppingCriterion::wall_clock(budget), trace);

    AlgorithmConfig gadegd;
    gadegd.algorithm = Algorithm::GADEGD;
    gadegd.seed = 7;
    const RunResult gadegd_run = run(inst, gadegd, StoppingCriterion::wall_clock(budget), trace);

    const double ga_final = final_window_mean(ga_run.trace, 0.8 * budget);
    const double gadegd_final = final_window_mean(gadegd_run.trace, 0.8 * budget);

    bool never_zero = true;
    for (const TraceSample& s : gadegd_run.trace.samples)
        if (s.elapsed_s >= 0.1 * budget && s.diversity <= 0.0)
            never_zero = false;

    const bool ok =
        ga_final < 0.1 * inst.num_cities() && gadegd_final > 2.0 * ga_final && never_zero;
    acc.report(6, ok,
               fmt("diversity final-20%%: GA %.3f (< 5.2), GADEGD %.3f (> 2x GA), "
                   "GADEGD nonzero after 10%%: %s",
                   ga_final, gadegd_final, never_zero ? "yes" : "no"));
}

// --- criterion 7 ------------------------------------------------------------

void criterion_7(Acceptance& acc, int jobs) {
    bool ok = true;
    bool saturated_tie_only = true;
    std::string detail = "memetic ordering:";
    for (const std::string& file :
         {std::string("eil51.tsp"), std::string("berlin52.tsp"), std::string("kroA100.tsp")}) {
        const double madegd = acc.mean(file, Algorithm::MADEGD);
        const double gadegd = acc.mean(file, Algorithm::GADEGD);
        const double ma = acc.mean(file, Algorithm::MA);
        const double grasp = acc.mean(file, Algorithm::GRASP);
        const double ig = acc.mean(file, Algorithm::IG);
        const bool here = madegd <= gadegd && madegd < ma && madegd < grasp && madegd < ig;
        ok = ok && here;
        // Every violated comparison being an exact tie at the known
        // optimum means both sides solved the instance in every replicate.
        const double optimum =
            static_cast<double>(*testutil::load_data_instance(file).optimum());
        if (!here) {
            for (double other : {ma, grasp, ig})
                if (madegd >= other && !(madegd == optimum && other == optimum))
                    saturated_tie_only = false;
            if (madegd > gadegd)
                saturated_tie_only = false;
        }
        detail += fmt(" %s[MADEGD %.1f, GADEGD %.1f, MA %.1f, GRASP %.1f, IG %.1f]",
                      file.substr(0, file.size() - 4).c_str(), madegd, gadegd, ma, grasp, ig);
    }
    acc.report(7, ok, detail);

    if (!ok && saturated_tie_only) {
        // The pinned instances are saturated (all replicates at the
        // optimum), so the ordering is unobservable there. Demonstrate it
        // on a 200-city instance where neither algorithm reaches the floor.
        const Instance hard = testutil::random_instance(200, 424243);
        ExperimentSpec spec;
        const std::string path = std::filesystem::temp_directory_path() / "tsplab_hard200.tsp";
        {
            std::ofstream out(path);
            out << "NAME: hard200\nTYPE: TSP\nDIMENSION: 200\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                << "NODE_COORD_SECTION\n";
            for (int i = 0; i < 200; ++i)
                out << i + 1 << ' ' << hard.coords()[i].first << ' ' << hard.coords()[i].second
                    << '\n';
            out << "EOF\n";
        }
        spec.instances = {path};
        AlgorithmConfig madegd_cfg, grasp_cfg;
        madegd_cfg.algorithm = Algorithm::MADEGD;
        grasp_cfg.algorithm = Algorithm::GRASP;
        spec.algorithms = {madegd_cfg, grasp_cfg};
        spec.budget = BudgetRule::per_city_rate(0.1);
        spec.replicates = 3;
        spec.base_seed = 424244;
        spec.jobs = jobs;
        const ExperimentResult result = run_experiment(spec);
        if (result.rows.size() == 2)
            std::printf("             note: on an unsaturated 200-city instance (20s budget) "
                        "MADEGD mean %.1f vs GRASP mean %.1f\n",
                        result.rows[0].mean_cost, result.rows[1].mean_cost);
    }
}

// --- criterion 8 ------------------------------------------------------------

void criterion_8(Acceptance& acc) {
    bool grasp_ok = true, ma_ok = true, ig_ok = true;
    for (const std::string& file :
         {std::string("eil51.tsp"), std::string("berlin52.tsp"), std::string("kroA100.tsp")}) {
        for (const RunRecord& r : acc.cell(file, Algorithm::GRASP, 10).runs)
            grasp_ok = grasp_ok && r.ls_calls == r.iterations;
        for (const RunRecord& r : acc.cell(file, Algorithm::MA, 10).runs)
            ma_ok = ma_ok && r.ls_applied_iterations == r.iterations;
        for (const RunRecord& r : acc.cell(file, Algorithm::IG, 10).runs)
            ig_ok = ig_ok && r.ls_calls == r.iterations + 1;
    }
    acc.report(8, grasp_ok && ma_ok && ig_ok,
               fmt("local-search accounting: GRASP calls==iterations %s, MA applied 100%% %s, "
                   "IG calls==iterations+1 %s",
                   grasp_ok ? "yes" : "no", ma_ok ? "yes" : "no", ig_ok ? "yes" : "no"));
}

// --- criterion 9 ------------------------------------------------------------

void criterion_9(Acceptance& acc) {
    int hits = 0;
    bool never_beats = true;
    const int trials = 20;
    Rng rng(515);
    for (int trial = 0; trial < trials; ++trial) {
        const int m = 5 + trial % 4;
        const Instance inst = testutil::random_instance(m, 51600 + trial);
        const std::int64_t optimum = testutil::brute_force_optimum(inst);

        AlgorithmConfig config;
        config.algorithm = Algorithm::GADEGD;
        config.seed = 900 + trial;
        const RunResult res = run(inst, config, StoppingCriterion::generations(500));
        hits += res.best.cost == optimum;
        never_beats = never_beats && res.best.cost >= optimum;

        const NeighborLists nl = build_neighbor_lists(inst, m - 1);
        for (int attempt = 0; attempt < 5; ++attempt) {
            const Tour improved =
                two_opt(inst, make_tour(inst, testutil::random_permutation(m, rng)), nl);
            never_beats = never_beats && improved.cost >= optimum;
        }
    }
    acc.report(9, hits >= 19 && never_beats,
               fmt("exhaustive oracle: GADEGD hit %d/%d tiny optima; nothing beat the oracle: %s",
                   hits, trials, never_beats ? "yes" : "no"));
}

// --- criterion 10 -----------------------------------------------------------

bool invariant_permutation_closure() {
    Rng rng(61);
    int checked = 0;
    while (checked < 10000) {
        const int m = rng.uniform_int(4, 24);
        const Instance inst = testutil::random_instance(m, 71000 + checked);
        const Tour a = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour b = make_tour(inst, testutil::random_permutation(m, rng));

        const Tour child = ox_crossover(inst, a, b, rng);
        const Tour mutant = exchange_mutation(inst, a, rng);
        const Tour greedy = greedy_randomized_tour(inst, {0.1}, rng);
        const NeighborLists nl = build_neighbor_lists(inst, std::min(8, m - 1));
        const Tour improved = two_opt(inst, a, nl);
        for (const Tour* t : {&child, &mutant, &greedy, &improved}) {
            if (!is_permutation(t->order, m) || t->cost != tour_cost(inst, t->order))
                return false;
            ++checked;
        }
        if (improved.cost > a.cost)
            return false;
    }
    return true;
}

bool invariant_edge_distance() {
    Rng rng(62);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = rng.uniform_int(4, 16);
        const Instance inst = testutil::random_instance(m, 72000 + trial);
        const Tour a = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour b = make_tour(inst, testutil::random_permutation(m, rng));
        const int d = edge_distance(a, b);
        if (d < 0 || d > m || d == 1 || d != edge_distance(b, a) || edge_distance(a, a) != 0)
            return false;
    }
    return true;
}

bool invariant_diversity() {
    Rng rng(63);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = rng.uniform_int(5, 12);
        const Instance inst = testutil::random_instance(m, 73000 + trial);
        Population pop;
        const int n = rng.uniform_int(2, 10);
        for (int i = 0; i < n; ++i)
            pop.members.push_back(random_tour(inst, rng));
        pop.improved.assign(n, false);
        const double d = population_diversity(pop);
        if (d < 0.0 || d > m)
            return false;
    }
    // Closed form 2d/n for n-1 copies plus one distinct member.
    const Instance inst = testutil::random_instance(10, 73999);
    const Tour a = make_tour(inst, testutil::random_permutation(10, rng));
    const Tour b = make_tour(inst, testutil::random_permutation(10, rng));
    const double d = edge_distance(a, b);
    for (int n : {3, 4}) {
        Population pop;
        for (int i = 0; i < n - 1; ++i)
            pop.members.push_back(a);
        pop.members.push_back(b);
        pop.improved.assign(n, false);
        if (std::abs(population_diversity(pop) - 2.0 * d / n) > 1e-9)
            return false;
    }
    return true;
}

bool invariant_compete_elitism() {
    Rng rng(64);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = rng.uniform_int(5, 12);
        const Instance inst = testutil::random_instance(m, 74000 + trial);
        const Tour parent = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour child = make_tour(inst, testutil::random_permutation(m, rng));
        const Tour& winner = compete(parent, child);
        if (winner.cost > parent.cost)
            return false;
        if (child.cost >= parent.cost && &winner != &parent)
            return false;

        Population pop;
        const int n = rng.uniform_int(2, 6);
        std::int64_t best_before = INT64_MAX;
        for (int i = 0; i < n; ++i) {
            pop.members.push_back(random_tour(inst, rng));
            best_before = std::min(best_before, pop.members.back().cost);
        }
        pop.improved.assign(n, false);
        const Tour elite = random_tour(inst, rng);
        apply_elitism(pop, elite);
        std::int64_t best_after = INT64_MAX;
        for (const Tour& t : pop.members)
            best_after = std::min(best_after, t.cost);
        if (best_after > std::min(best_before, elite.cost))
            return false;
    }
    return true;
}

bool invariant_diversification() {
    Rng rng(65);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = rng.uniform_int(5, 9);
        const Instance inst = testutil::random_instance(m, 75000 + trial, 40.0);
        const int n = rng.uniform_int(1, 12);
        Population pop;
        for (int i = 0; i < n; ++i)
            pop.members.push_back(random_tour(inst, rng));
        pop.improved.assign(n, false);
        if (n >= 2)
            for (int copies = rng.uniform_int(0, n / 2); copies > 0; --copies)
                pop.members[rng.uniform_int(0, n - 1)] = pop.members[rng.uniform_int(0, n - 1)];

        std::int64_t best_before = INT64_MAX;
        for (const Tour& t : pop.members)
            best_before = std::min(best_before, t.cost);

        const auto result = greedy_diversification_id(pop, inst, {0.1}, rng);
        if (result.population.size() != n)
            return false;
        std::int64_t best_after = INT64_MAX;
        for (const Tour& t : result.population.members)
            best_after = std::min(best_after, t.cost);
        if (best_after > best_before)
            return false;
        const int kept = n - result.num_replaced;
        for (int i = 0; i < kept; ++i)
            for (int j = i + 1; j < kept; ++j)
                if (tours_equal(result.population.members[i], result.population.members[j]))
                    return false;
    }
    return true;
}

bool invariant_adjacent_pairs() {
    Rng rng(66);
    const Instance inst = testutil::random_instance(8, 76000);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform_int(2, 20);
        Population pop;
        for (int i = 0; i < n; ++i)
            pop.members.push_back(random_tour(inst, rng));
        pop.improved.assign(n, false);
        const auto pairs = randomized_adjacent_pairs(pop, rng);
        std::vector<int> left(n, 0), right(n, 0);
        for (const auto& [a, b] : pairs) {
            ++left[a];
            ++right[b];
        }
        for (int i = 0; i < n; ++i)
            if (left[i] != 1 || right[i] != 1)
                return false;
    }
    return true;
}

bool invariant_runner_determinism() {
    const Instance inst = testutil::load_data_instance("eil51.tsp");
    for (Algorithm a :
         {Algorithm::GA, Algorithm::GA_GD, Algorithm::GADEGD, Algorithm::GADEGD_NoGD,
          Algorithm::GADEGD_Elitism, Algorithm::GADEGD_Tournament, Algorithm::MA,
          Algorithm::MADEGD, Algorithm::CHC, Algorithm::CHC_GR, Algorithm::MicroGA,
          Algorithm::MicroGA_GR, Algorithm::GRASP, Algorithm::IG}) {
        AlgorithmConfig config;
        config.algorithm = a;
        config.seed = 31337;
        const RunResult first = run(inst, config, StoppingCriterion::generations(15));
        const RunResult second = run(inst, config, StoppingCriterion::generations(15));
        if (first.best.cost != second.best.cost || first.best.order != second.best.order ||
            first.generated_solutions != second.generated_solutions ||
            first.gd_solutions != second.gd_solutions || first.ls_calls != second.ls_calls)
            return false;
    }
    return true;
}

void criterion_10(Acceptance& acc) {
    struct Named {
        const char* name;
        bool (*fn)();
    };
    const Named invariants[] = {
        {"permutation-closure", invariant_permutation_closure},
        {"edge-distance", invariant_edge_distance},
        {"diversity", invariant_diversity},
        {"compete-elitism", invariant_compete_elitism},
        {"diversification", invariant_diversification},
        {"adjacent-pairs", invariant_adjacent_pairs},
        {"determinism", invariant_runner_determinism},
    };
    bool ok = true;
    std::string detail = "invariant suite:";
    for (const Named& inv : invariants) {
        const bool here = inv.fn();
        ok = ok && here;
        detail += fmt(" %s=%s", inv.name, here ? "ok" : "FAIL");
    }
    acc.report(10, ok, detail);
}

// --- criterion 11 -----------------------------------------------------------

void criterion_11(Acceptance& acc, int jobs) {
    const Instance inst = testutil::load_data_instance("berlin52.tsp");
    AlgorithmConfig gadegd;
    gadegd.algorithm = Algorithm::GADEGD;
    gadegd.seed = 77;
    const TimeToOptimum g = time_to_optimum(inst, gadegd, 20.0, 10, jobs);

    AlgorithmConfig micro;
    micro.algorithm = Algorithm::MicroGA_GR;
    micro.seed = 77;
    const TimeToOptimum m = time_to_optimum(inst, micro, 20.0, 10, jobs);

    acc.report(11, g.hits >= m.hits,
               fmt("time-to-optimum berlin52 (20s cap): GADEGD %d/10 hits (mean %.3fs), "
                   "MicroGA_GR %d/10 hits (mean %.3fs)",
                   g.hits, g.mean_seconds, m.hits, m.mean_seconds));
}

} // namespace

int main(int argc, char** argv) {
    int jobs = 2;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--jobs") == 0 && i + 1 < argc)
            jobs = std::atoi(argv[i + 1]);

    Acceptance acc(jobs);
    try {
        criterion_1_and_5(acc);
        criterion_2(acc);
        criterion_3(acc, jobs);
        criterion_4(acc);
        criterion_6(acc);
        criterion_7(acc, jobs);
        criterion_8(acc);
        criterion_9(acc);
        criterion_10(acc);
        criterion_11(acc, jobs);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 2;
    }

    std::printf("%d criterion(s) failed\n", acc.failures());
    return acc.failures() == 0 ? 0 : 1;
}
