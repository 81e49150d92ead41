// Command-line front end: single runs, experiment specs, table generation
// and diversity/convergence traces.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsplab/errors.hpp"
#include "tsplab/harness.hpp"

namespace {

using namespace tsplab;

std::string format_gap(const Instance& instance, std::int64_t cost) {
    if (!instance.optimum() || *instance.optimum() == 0)
        return "unknown (no reference optimum)";
    const double gap =
        100.0 * (static_cast<double>(cost) - static_cast<double>(*instance.optimum())) /
        static_cast<double>(*instance.optimum());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f%%", gap);
    return buf;
}

SummaryFormat parse_format(const std::string& name) {
    if (name == "csv")
        return SummaryFormat::Csv;
    if (name == "json")
        return SummaryFormat::Json;
    if (name == "md")
        return SummaryFormat::Markdown;
    throw ConfigError("unknown format '" + name + "' (expected csv|json|md)");
}

void print_errors(const std::vector<std::string>& errors) {
    for (const std::string& error : errors)
        std::cerr << "error: " << error << "\n";
}

int cmd_run(const std::string& spec_path) {
    const ExperimentSpec spec = load_experiment_spec(spec_path);
    if (!spec.traces_dir.empty())
        std::filesystem::create_directories(spec.traces_dir);
    const ExperimentResult result = run_experiment(spec);
    std::cout << format_summary(result.rows, SummaryFormat::Markdown);
    print_errors(result.errors);
    return result.errors.empty() ? 0 : 1;
}

int cmd_solve(const std::string& instance_path, const std::string& algorithm, std::uint64_t seed,
              std::optional<double> seconds, std::optional<std::int64_t> generations,
              const std::string& trace_path, std::optional<int> population,
              std::optional<double> sigma, std::optional<std::string> characteristic,
              std::optional<int> ls_neighbors, bool or_opt) {
    const Instance instance = load_instance(instance_path);

    AlgorithmConfig config;
    config.algorithm = parse_algorithm(algorithm);
    config.seed = seed;
    config.population_size = population;
    config.sigma = sigma;
    if (characteristic)
        config.characteristic = parse_characteristic(*characteristic);
    config.ls_neighbors = ls_neighbors;
    if (or_opt)
        config.use_or_opt = true;

    StoppingCriterion stop =
        generations ? StoppingCriterion::generations(*generations)
                    : StoppingCriterion::wall_clock(
                          seconds ? *seconds : 0.1 * instance.num_cities());
    stop.target_cost = instance.optimum();

    TraceOptions trace;
    trace.enabled = !trace_path.empty();

    const RunResult result = run(instance, config, stop, trace);
    std::cout << "instance " << instance.name() << " (" << instance.num_cities() << " cities)\n"
              << "algorithm " << algorithm << "\n"
              << "best cost " << result.best.cost << "\n"
              << "gap " << format_gap(instance, result.best.cost) << "\n"
              << "iterations " << result.iterations << ", generated "
              << result.generated_solutions << ", gd " << result.gd_solutions << ", ls calls "
              << result.ls_calls << "\n";
    if (result.time_to_target)
        std::cout << "reached reference optimum after " << *result.time_to_target << " s\n";
    if (trace.enabled)
        emit_trace_csv(result.trace, trace_path);
    return 0;
}

int cmd_compare(const std::string& spec_path, const std::string& out_dir,
                const std::string& format_name) {
    const SummaryFormat format = parse_format(format_name);
    const ExperimentSpec spec = load_experiment_spec(spec_path);
    std::filesystem::create_directories(out_dir);
    if (!spec.traces_dir.empty())
        std::filesystem::create_directories(spec.traces_dir);

    const ExperimentResult result = run_experiment(spec);
    const std::string extension =
        format == SummaryFormat::Csv ? "csv" : (format == SummaryFormat::Json ? "json" : "md");
    emit_summary(result.rows, format, out_dir + "/summary." + extension);

    std::ofstream runs_file(out_dir + "/runs.csv");
    runs_file << format_run_records(result.runs);

    print_errors(result.errors);
    return result.errors.empty() ? 0 : 1;
}

int cmd_trace(const std::string& instance_path, const std::string& algorithms_csv, double seconds,
              const std::string& out_dir, double window) {
    const Instance instance = load_instance(instance_path);
    std::filesystem::create_directories(out_dir);

    std::vector<std::string> names;
    std::string current;
    for (char c : algorithms_csv + ",") {
        if (c == ',') {
            if (!current.empty())
                names.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (names.empty())
        throw ConfigError("no algorithms given");

    TraceOptions trace;
    trace.enabled = true;
    trace.window = window;
    for (const std::string& name : names) {
        AlgorithmConfig config;
        config.algorithm = parse_algorithm(name);
        const RunResult result =
            run(instance, config, StoppingCriterion::wall_clock(seconds), trace);
        const std::string path = out_dir + "/" + instance.name() + "_" + name + ".csv";
        emit_trace_csv(result.trace, path);
        std::cout << name << ": best " << result.best.cost << ", trace " << path << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"TSP metaheuristic benchmark runner"};
    app.require_subcommand(1);

    std::string spec_path, instance_path, algorithm, trace_path, out_dir, algorithms_csv;
    std::string format_name = "csv";
    std::uint64_t seed = 1;
    double seconds_value = 0.0, window = 0.01;
    std::int64_t generations_value = 0;
    int population_value = 0, ls_neighbors_value = 0;
    double sigma_value = -1.0;
    std::string characteristic_value;
    bool or_opt = false;

    auto* run_cmd = app.add_subcommand("run", "execute an experiment spec");
    run_cmd->add_option("--spec", spec_path, "experiment spec (JSON)")->required();

    auto* solve_cmd = app.add_subcommand("solve", "single run on one instance");
    solve_cmd->add_option("--instance", instance_path, "TSPLIB .tsp file")->required();
    solve_cmd->add_option("--algorithm", algorithm, "algorithm name")->required();
    solve_cmd->add_option("--seed", seed, "run seed");
    auto* seconds_opt = solve_cmd->add_option("--seconds", seconds_value, "wall-clock budget");
    auto* generations_opt =
        solve_cmd->add_option("--generations", generations_value, "generation budget");
    seconds_opt->excludes(generations_opt);
    solve_cmd->add_option("--trace", trace_path, "write the run trace CSV here");
    auto* population_opt = solve_cmd->add_option("--population", population_value);
    auto* sigma_opt = solve_cmd->add_option("--sigma", sigma_value, "RCL width");
    auto* characteristic_opt =
        solve_cmd->add_option("--characteristic", characteristic_value, "id|objective");
    auto* neighbors_opt = solve_cmd->add_option("--ls-neighbors", ls_neighbors_value);
    solve_cmd->add_flag("--or-opt", or_opt, "enable segment relocation in the local search");

    auto* compare_cmd = app.add_subcommand("compare", "full table generation");
    compare_cmd->add_option("--spec", spec_path, "experiment spec (JSON)")->required();
    compare_cmd->add_option("--out", out_dir, "output directory")->required();
    compare_cmd->add_option("--format", format_name, "csv|json|md");

    auto* trace_cmd = app.add_subcommand("trace", "diversity/convergence traces");
    trace_cmd->add_option("--instance", instance_path, "TSPLIB .tsp file")->required();
    trace_cmd->add_option("--algorithms", algorithms_csv, "comma-separated names")->required();
    trace_cmd->add_option("--seconds", seconds_value, "wall-clock budget")->required();
    trace_cmd->add_option("--out", out_dir, "output directory")->required();
    trace_cmd->add_option("--window", window, "trace window in seconds");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed())
            return cmd_run(spec_path);
        if (solve_cmd->parsed()) {
            return cmd_solve(
                instance_path, algorithm, seed,
                seconds_opt->count() ? std::optional(seconds_value) : std::nullopt,
                generations_opt->count() ? std::optional(generations_value) : std::nullopt,
                trace_path, population_opt->count() ? std::optional(population_value) : std::nullopt,
                sigma_opt->count() ? std::optional(sigma_value) : std::nullopt,
                characteristic_opt->count() ? std::optional(characteristic_value) : std::nullopt,
                neighbors_opt->count() ? std::optional(ls_neighbors_value) : std::nullopt, or_opt);
        }
        if (compare_cmd->parsed())
            return cmd_compare(spec_path, out_dir, format_name);
        if (trace_cmd->parsed())
            return cmd_trace(instance_path, algorithms_csv, seconds_value, out_dir, window);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
