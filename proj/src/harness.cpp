#include "tsplab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tsplab/errors.hpp"
#include "tsplab/rng.hpp"

namespace tsplab {

BudgetRule BudgetRule::per_city_rate(double seconds_per_city) {
    if (seconds_per_city <= 0.0)
        throw ConfigError("per-city budget rate must be positive");
    BudgetRule b;
    b.kind = Kind::PerCityRate;
    b.seconds_per_city = seconds_per_city;
    return b;
}

BudgetRule BudgetRule::fixed_seconds(double seconds) {
    if (seconds <= 0.0)
        throw ConfigError("budget seconds must be positive");
    BudgetRule b;
    b.kind = Kind::FixedSeconds;
    b.seconds = seconds;
    return b;
}

BudgetRule BudgetRule::generations(std::int64_t count) {
    if (count <= 0)
        throw ConfigError("generation budget must be positive");
    BudgetRule b;
    b.kind = Kind::Generations;
    b.generation_count = count;
    return b;
}

StoppingCriterion BudgetRule::to_criterion(const Instance& instance) const {
    switch (kind) {
    case Kind::PerCityRate:
        return StoppingCriterion::wall_clock(seconds_per_city * instance.num_cities());
    case Kind::FixedSeconds:
        return StoppingCriterion::wall_clock(seconds);
    case Kind::Generations:
        return StoppingCriterion::generations(generation_count);
    }
    throw ConfigError("invalid budget rule");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t instance_index,
                          std::uint64_t algorithm_index, std::uint64_t replicate) {
    std::uint64_t s = splitmix64(base_seed);
    s = splitmix64(s ^ instance_index);
    s = splitmix64(s ^ algorithm_index);
    s = splitmix64(s ^ replicate);
    return s;
}

namespace {

std::string format_float(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

// Run `replicates` jobs of `fn(replicate_index)` over up to `jobs`
// threads. The first exception raised by any replicate is rethrown in the
// caller once every worker has joined.
void for_each_replicate(int replicates, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, replicates));
    if (jobs == 1) {
        for (int r = 0; r < replicates; ++r)
            fn(r);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&] {
            while (true) {
                const int r = next.fetch_add(1);
                if (r >= replicates)
                    return;
                try {
                    fn(r);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    }
    for (auto& worker : workers)
        worker.join();
    if (failure)
        std::rethrow_exception(failure);
}

SummaryRow aggregate(const std::string& instance_name, std::optional<std::int64_t> optimum,
                     const std::string& algorithm, const std::vector<RunRecord>& runs) {
    SummaryRow row;
    row.instance = instance_name;
    row.optimum = optimum;
    row.algorithm = algorithm;

    const double n = static_cast<double>(runs.size());
    double sum = 0.0;
    row.best_cost = runs.front().best_cost;
    for (const RunRecord& r : runs) {
        sum += static_cast<double>(r.best_cost);
        row.best_cost = std::min(row.best_cost, r.best_cost);
        row.mean_generated += static_cast<double>(r.generated_solutions) / n;
        row.mean_ls_calls += static_cast<double>(r.ls_calls) / n;
        if (r.generated_solutions > 0)
            row.gd_pct += 100.0 * r.gd_solutions / r.generated_solutions / n;
        if (r.iterations > 0)
            row.ls_applied_pct += 100.0 * r.ls_applied_iterations / r.iterations / n;
        if (r.time_to_optimum) {
            ++row.opt_hits;
            row.mean_time_to_opt = row.mean_time_to_opt.value_or(0.0) + *r.time_to_optimum;
        }
    }
    row.mean_cost = sum / n;
    double sq = 0.0;
    for (const RunRecord& r : runs)
        sq += (r.best_cost - row.mean_cost) * (r.best_cost - row.mean_cost);
    row.stddev_cost = std::sqrt(sq / n);
    if (optimum && *optimum != 0)
        row.gap_pct = 100.0 * (row.mean_cost - static_cast<double>(*optimum)) /
                      static_cast<double>(*optimum);
    if (row.mean_time_to_opt)
        row.mean_time_to_opt = *row.mean_time_to_opt / row.opt_hits;
    return row;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.replicates < 1)
        throw ConfigError("replicates must be at least 1");
    if (spec.trace_window <= 0.0)
        throw ConfigError("trace window must be positive");

    ExperimentResult result;
    for (std::size_t ii = 0; ii < spec.instances.size(); ++ii) {
        std::optional<Instance> loaded;
        try {
            loaded = load_instance(spec.instances[ii]);
        } catch (const std::exception& e) {
            result.errors.push_back(spec.instances[ii] + ": " + e.what());
            continue;
        }
        const Instance& instance = *loaded;

        for (std::size_t ai = 0; ai < spec.algorithms.size(); ++ai) {
            const AlgorithmConfig& base_config = spec.algorithms[ai];
            std::string algo_name(algorithm_name(base_config.algorithm));
            try {
                resolve_config(base_config);
                StoppingCriterion stop = spec.budget.to_criterion(instance);
                stop.target_cost = instance.optimum();
                stop.stop_at_target = false;

                TraceOptions trace;
                trace.enabled = !spec.traces_dir.empty();
                trace.window = spec.trace_window;

                std::vector<RunRecord> cell(spec.replicates);
                for_each_replicate(spec.replicates, spec.jobs, [&](int r) {
                    AlgorithmConfig config = base_config;
                    config.seed = derive_seed(spec.base_seed, ii, ai, r);
                    RunResult res = run(instance, config, stop, trace);
                    RunRecord& rec = cell[r];
                    rec.instance = instance.name();
                    rec.algorithm = algo_name;
                    rec.replicate = r;
                    rec.seed = config.seed;
                    rec.best_cost = res.best.cost;
                    rec.generated_solutions = res.generated_solutions;
                    rec.gd_solutions = res.gd_solutions;
                    rec.ls_calls = res.ls_calls;
                    rec.ls_applied_iterations = res.ls_applied_iterations;
                    rec.iterations = res.iterations;
                    rec.time_to_optimum = res.time_to_target;
                    if (trace.enabled) {
                        emit_trace_csv(res.trace, spec.traces_dir + "/" + instance.name() + "_" +
                                                      algo_name + "_r" + std::to_string(r) +
                                                      ".csv");
                    }
                });

                result.rows.push_back(
                    aggregate(instance.name(), instance.optimum(), algo_name, cell));
                result.runs.insert(result.runs.end(), cell.begin(), cell.end());
            } catch (const std::exception& e) {
                result.errors.push_back(instance.name() + "/" + algo_name + ": " + e.what());
            }
        }
    }
    return result;
}

TimeToOptimum time_to_optimum(const Instance& instance, const AlgorithmConfig& config,
                              double cap_seconds, int replicates, int jobs) {
    if (!instance.optimum())
        throw ConfigError("instance '" + instance.name() + "' has no known optimum");
    if (replicates < 1)
        throw ConfigError("replicates must be at least 1");

    TimeToOptimum out;
    if (cap_seconds <= 0.0)
        return out;

    StoppingCriterion stop = StoppingCriterion::wall_clock(cap_seconds);
    stop.target_cost = instance.optimum();
    stop.stop_at_target = true;

    std::vector<std::optional<double>> times(replicates);
    for_each_replicate(replicates, jobs, [&](int r) {
        AlgorithmConfig replicate_config = config;
        replicate_config.seed = derive_seed(config.seed, 0, 0, r);
        RunResult res = run(instance, replicate_config, stop);
        times[r] = res.time_to_target;
    });

    double sum = 0.0;
    for (const auto& t : times) {
        if (t) {
            ++out.hits;
            sum += *t;
        }
    }
    if (out.hits > 0)
        out.mean_seconds = sum / out.hits;
    return out;
}

void emit_trace_csv(const RunTrace& trace, const std::string& path) {
    std::ofstream file(path);
    if (!file)
        throw ParseError("cannot write trace file '" + path + "'");
    if (trace.diversity_subsampled)
        file << "# diversity subsampled to " << trace.diversity_pair_cap << " pairs\n";
    file << "elapsed_s,best_cost,diversity\n";
    for (const TraceSample& s : trace.samples)
        file << format_float(s.elapsed_s) << ',' << s.best_cost << ','
             << format_float(s.diversity) << '\n';
    if (!file)
        throw ParseError("failed writing trace file '" + path + "'");
}

namespace {

constexpr const char* kSummaryColumns[] = {
    "instance", "optimum",   "algorithm", "mean",           "stddev",
    "best",     "gap_pct",   "generated", "gd_pct",         "ls_calls",
    "ls_applied_pct",        "opt_hits",  "mean_time_to_opt"};

std::string summary_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < std::size(kSummaryColumns); ++i)
        out << (i ? "," : "") << kSummaryColumns[i];
    out << '\n';
    for (const SummaryRow& r : rows) {
        out << r.instance << ',';
        if (r.optimum)
            out << *r.optimum;
        out << ',' << r.algorithm << ',' << format_float(r.mean_cost) << ','
            << format_float(r.stddev_cost) << ',' << r.best_cost << ',';
        if (r.gap_pct)
            out << format_float(*r.gap_pct);
        out << ',' << format_float(r.mean_generated) << ',' << format_float(r.gd_pct) << ','
            << format_float(r.mean_ls_calls) << ',' << format_float(r.ls_applied_pct) << ','
            << r.opt_hits << ',';
        if (r.mean_time_to_opt)
            out << format_float(*r.mean_time_to_opt);
        out << '\n';
    }
    return out.str();
}

nlohmann::json row_to_json(const SummaryRow& r) {
    nlohmann::json j;
    j["instance"] = r.instance;
    j["optimum"] = r.optimum ? nlohmann::json(*r.optimum) : nlohmann::json(nullptr);
    j["algorithm"] = r.algorithm;
    j["mean"] = r.mean_cost;
    j["stddev"] = r.stddev_cost;
    j["best"] = r.best_cost;
    j["gap_pct"] = r.gap_pct ? nlohmann::json(*r.gap_pct) : nlohmann::json(nullptr);
    j["generated"] = r.mean_generated;
    j["gd_pct"] = r.gd_pct;
    j["ls_calls"] = r.mean_ls_calls;
    j["ls_applied_pct"] = r.ls_applied_pct;
    j["opt_hits"] = r.opt_hits;
    j["mean_time_to_opt"] =
        r.mean_time_to_opt ? nlohmann::json(*r.mean_time_to_opt) : nlohmann::json(nullptr);
    return j;
}

std::string summary_json(const std::vector<SummaryRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SummaryRow& r : rows)
        arr.push_back(row_to_json(r));
    return arr.dump(2) + "\n";
}

// Instances where this row has the strictly smallest mean, ties included.
bool is_best_mean(const std::vector<SummaryRow>& rows, const SummaryRow& row) {
    for (const SummaryRow& other : rows)
        if (other.instance == row.instance && other.mean_cost < row.mean_cost)
            return false;
    return true;
}

std::string summary_markdown(const std::vector<SummaryRow>& rows) {
    std::ostringstream out;
    out << "| instance | optimum | algorithm | mean | stddev | best | gap_pct | generated "
           "| gd_pct | ls_calls | ls_applied_pct | opt_hits | mean_time_to_opt |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    for (const SummaryRow& r : rows) {
        const bool best = is_best_mean(rows, r);
        out << "| " << r.instance << " | " << (r.optimum ? std::to_string(*r.optimum) : "-")
            << " | " << r.algorithm << " | " << (best ? "**" : "") << format_float(r.mean_cost)
            << (best ? "**" : "") << " | " << format_float(r.stddev_cost) << " | " << r.best_cost
            << " | " << (r.gap_pct ? format_float(*r.gap_pct) : "-") << " | "
            << format_float(r.mean_generated) << " | " << format_float(r.gd_pct) << " | "
            << format_float(r.mean_ls_calls) << " | " << format_float(r.ls_applied_pct) << " | "
            << r.opt_hits << " | "
            << (r.mean_time_to_opt ? format_float(*r.mean_time_to_opt) : "-") << " |\n";
    }
    // Win-count footer: times each algorithm had the best mean on an instance.
    std::vector<std::string> algorithms;
    for (const SummaryRow& r : rows)
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);
    out << "\n| algorithm | wins |\n|---|---|\n";
    for (const std::string& algo : algorithms) {
        int wins = 0;
        for (const SummaryRow& r : rows)
            if (r.algorithm == algo && is_best_mean(rows, r))
                ++wins;
        out << "| " << algo << " | " << wins << " |\n";
    }
    return out.str();
}

} // namespace

std::string format_summary(const std::vector<SummaryRow>& rows, SummaryFormat format) {
    switch (format) {
    case SummaryFormat::Csv:
        return summary_csv(rows);
    case SummaryFormat::Json:
        return summary_json(rows);
    case SummaryFormat::Markdown:
        return summary_markdown(rows);
    }
    throw ConfigError("invalid summary format");
}

void emit_summary(const std::vector<SummaryRow>& rows, SummaryFormat format,
                  const std::string& path) {
    std::ofstream file(path);
    if (!file)
        throw ParseError("cannot write summary file '" + path + "'");
    file << format_summary(rows, format);
    if (!file)
        throw ParseError("failed writing summary file '" + path + "'");
}

std::vector<SummaryRow> summary_from_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    std::vector<SummaryRow> rows;
    for (const auto& j : arr) {
        SummaryRow r;
        r.instance = j.at("instance").get<std::string>();
        if (!j.at("optimum").is_null())
            r.optimum = j.at("optimum").get<std::int64_t>();
        r.algorithm = j.at("algorithm").get<std::string>();
        r.mean_cost = j.at("mean").get<double>();
        r.stddev_cost = j.at("stddev").get<double>();
        r.best_cost = j.at("best").get<std::int64_t>();
        if (!j.at("gap_pct").is_null())
            r.gap_pct = j.at("gap_pct").get<double>();
        r.mean_generated = j.at("generated").get<double>();
        r.gd_pct = j.at("gd_pct").get<double>();
        r.mean_ls_calls = j.at("ls_calls").get<double>();
        r.ls_applied_pct = j.at("ls_applied_pct").get<double>();
        r.opt_hits = j.at("opt_hits").get<int>();
        if (!j.at("mean_time_to_opt").is_null())
            r.mean_time_to_opt = j.at("mean_time_to_opt").get<double>();
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string format_run_records(const std::vector<RunRecord>& runs) {
    std::ostringstream out;
    out << "instance,algorithm,replicate,seed,best_cost,generated,gd,ls_calls,ls_applied,"
           "iterations,time_to_optimum\n";
    for (const RunRecord& r : runs) {
        out << r.instance << ',' << r.algorithm << ',' << r.replicate << ',' << r.seed << ','
            << r.best_cost << ',' << r.generated_solutions << ',' << r.gd_solutions << ','
            << r.ls_calls << ',' << r.ls_applied_iterations << ',' << r.iterations << ',';
        if (r.time_to_optimum)
            out << format_float(*r.time_to_optimum);
        out << '\n';
    }
    return out.str();
}

namespace {

AlgorithmConfig algorithm_config_from_json(const nlohmann::json& j) {
    AlgorithmConfig config;
    config.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    for (const auto& [key, value] : j.items()) {
        if (key == "algorithm")
            continue;
        if (key == "population_size")
            config.population_size = value.get<int>();
        else if (key == "p_c")
            config.p_c = value.get<double>();
        else if (key == "p_m")
            config.p_m = value.get<double>();
        else if (key == "sigma")
            config.sigma = value.get<double>();
        else if (key == "characteristic")
            config.characteristic = parse_characteristic(value.get<std::string>());
        else if (key == "ls_neighbors")
            config.ls_neighbors = value.get<int>();
        else if (key == "use_or_opt")
            config.use_or_opt = value.get<bool>();
        else if (key == "ig_destroy_min")
            config.ig_destroy_min = value.get<double>();
        else if (key == "ig_destroy_max")
            config.ig_destroy_max = value.get<double>();
        else if (key == "seed")
            config.seed = value.get<std::uint64_t>();
        else
            throw ConfigError("unknown algorithm config key '" + key + "'");
    }
    return config;
}

} // namespace

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw ParseError("cannot open experiment spec '" + path + "'");
    nlohmann::json j;
    try {
        file >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }

    ExperimentSpec spec;
    try {
        for (const auto& instance : j.at("instances"))
            spec.instances.push_back(instance.get<std::string>());
        for (const auto& algo : j.at("algorithms"))
            spec.algorithms.push_back(algorithm_config_from_json(algo));

        const auto& budget = j.at("budget");
        if (budget.contains("per_city_seconds"))
            spec.budget = BudgetRule::per_city_rate(budget["per_city_seconds"].get<double>());
        else if (budget.contains("seconds"))
            spec.budget = BudgetRule::fixed_seconds(budget["seconds"].get<double>());
        else if (budget.contains("generations"))
            spec.budget = BudgetRule::generations(budget["generations"].get<std::int64_t>());
        else
            throw ConfigError("budget must set per_city_seconds, seconds or generations");

        if (j.contains("replicates"))
            spec.replicates = j["replicates"].get<int>();
        if (j.contains("base_seed"))
            spec.base_seed = j["base_seed"].get<std::uint64_t>();
        if (j.contains("trace_window"))
            spec.trace_window = j["trace_window"].get<double>();
        if (j.contains("traces_dir"))
            spec.traces_dir = j["traces_dir"].get<std::string>();
        if (j.contains("jobs"))
            spec.jobs = j["jobs"].get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid experiment spec '" + path + "': " + e.what());
    }

    if (spec.instances.empty())
        throw ConfigError("experiment spec lists no instances");
    if (spec.algorithms.empty())
        throw ConfigError("experiment spec lists no algorithms");
    if (spec.replicates < 1)
        throw ConfigError("replicates must be at least 1");
    return spec;
}

} // namespace tsplab
