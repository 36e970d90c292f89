// Command-line front end: single runs, benchmark suites, plot data and
// kernel inspection.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>

#include "pao/config.hpp"
#include "pao/error.hpp"
#include "pao/harness.hpp"
#include "pao/lti_kernel.hpp"

namespace fs = std::filesystem;
using namespace pao;

namespace {

/// Raw flag values; empty/unset flags leave the config file value in place.
struct Flags {
    std::string config_path;
    ExperimentConfig cli;
    std::string k;
    std::string attractors;
    bool no_timing = false;
};

void add_pao_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path, "JSON config file (flags override it)");
    cmd->add_option("--m", f.cli.m, "PAO inertia coefficient");
    cmd->add_option("--zeta", f.cli.zeta, "PAO damping ratio");
    cmd->add_option("--k", f.k, "PAO stiffnesses, comma separated");
    cmd->add_option("--q0", f.cli.q0, "PAO stochastic scale");
    cmd->add_option("--dt", f.cli.dt, "PAO integration interval");
    cmd->add_option("--attractors", f.attractors, "PAO attractors, comma separated (e.g. localbest,globalbest)");
    cmd->add_option("--bounds", f.cli.bounds_policy, "bounds policy: none, clip, reflect");
    cmd->add_option("--velocity-init", f.cli.velocity_init, "PAO velocity init: zero, uniform-scaled");
    cmd->add_option("--griewangk-denominator", f.cli.griewangk_denominator, "Griewangk quadratic denominator");
    cmd->add_flag("--no-timing", f.no_timing, "omit duration_ms so output is byte-reproducible");
}

ExperimentConfig resolve(Flags& f) {
    if (!f.k.empty()) f.cli.k = parse_number_list(f.k);
    if (!f.attractors.empty()) f.cli.attractors = split_list(f.attractors);
    ExperimentConfig cfg;
    if (!f.config_path.empty()) cfg = ExperimentConfig::load(f.config_path);
    cfg.merge(f.cli);
    return cfg;
}

void print_summary(const std::vector<SummaryRow>& rows) {
    std::cout << std::left << std::setw(6) << "opt" << std::setw(24) << "problem" << std::setw(5) << "dim"
              << std::setw(6) << "runs" << std::setw(15) << "median" << std::setw(15) << "mean" << "stddev\n";
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(6) << to_string(r.optimizer) << std::setw(24) << r.problem
                  << std::setw(5) << r.dim << std::setw(6) << r.runs << std::setw(15) << r.median << std::setw(15)
                  << r.mean << r.stddev << '\n';
    }
}

int cmd_run(Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    if (!cfg.optimizer || !cfg.problem || !cfg.out) {
        throw InvalidConfig("run needs --optimizer, --problem and --out (or the config keys)");
    }
    BenchmarkSuite suite;
    suite.problems = {{to_lower(*cfg.problem), cfg.dim.value_or(2)}};
    suite.optimizers = {parse_optimizer(*cfg.optimizer)};
    suite.pop = cfg.pop.value_or(100);
    suite.gens = cfg.gens.value_or(100);
    suite.repetitions = cfg.reps.value_or(1);
    suite.base_seed = cfg.seed.value_or(0);
    suite.config = cfg.optimizer_config();
    suite.problem_options = cfg.problem_options();
    const SuiteSummary summary = run_suite(suite, *cfg.out, !f.no_timing);
    print_summary(summary.rows);
    std::cout << "wrote " << summary.records.size() << " record(s) to " << *cfg.out << '\n';
    return 0;
}

int cmd_bench(Flags& f) {
    const ExperimentConfig cfg = resolve(f);
    if (!cfg.out) throw InvalidConfig("bench needs --out <dir>");
    BenchmarkSuite suite = BenchmarkSuite::standard(cfg.suite.value_or("2d"));
    suite.pop = cfg.pop.value_or(100);
    suite.gens = cfg.gens.value_or(100);
    suite.repetitions = cfg.reps.value_or(20);
    suite.base_seed = cfg.seed.value_or(0);
    suite.config = cfg.optimizer_config();
    suite.problem_options = cfg.problem_options();
    if (cfg.optimizer) {
        suite.optimizers.clear();
        for (const auto& name : split_list(*cfg.optimizer)) suite.optimizers.push_back(parse_optimizer(name));
    }

    const fs::path dir = *cfg.out;
    const SuiteSummary summary = run_suite(suite, dir / "runs.jsonl", !f.no_timing);
    write_summary_csv(summary.rows, dir / "summary.csv");
    print_summary(summary.rows);
    std::cout << "wrote " << summary.records.size() << " records to " << (dir / "runs.jsonl").string() << '\n';
    return 0;
}

int cmd_plot_data(const std::string& in_dir, const std::string& out_dir) {
    std::vector<RunRecord> records;
    std::vector<fs::path> inputs;
    if (fs::is_regular_file(in_dir)) {
        inputs.push_back(in_dir);
    } else {
        if (!fs::is_directory(in_dir)) throw IoFailure("no such directory: " + in_dir);
        for (const auto& entry : fs::directory_iterator(in_dir)) {
            if (entry.path().extension() == ".jsonl") inputs.push_back(entry.path());
        }
        std::sort(inputs.begin(), inputs.end());
    }
    if (inputs.empty()) throw IoFailure("no .jsonl files found in " + in_dir);
    for (const auto& p : inputs) {
        auto part = read_jsonl(p);
        records.insert(records.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    const auto written = emit_plot_data(aggregate_convergence(records), out_dir);
    for (const auto& p : written) std::cout << p.string() << '\n';
    return 0;
}

void print_matrix(const char* name, const Eigen::Matrix2d& m) {
    std::printf("%s =\n  [% .12e  % .12e]\n  [% .12e  % .12e]\n", name, m(0, 0), m(0, 1), m(1, 0), m(1, 1));
}

int cmd_kernel_info(const Hyperparams& hp) {
    const TransitionKernel kernel = build_kernel(hp);
    const double kp = hp.total_stiffness();
    const double omega = std::sqrt(kp / hp.m);
    std::printf("m = %g, zeta = %g, k' = %g, q0 = %g, dt = %g\n", hp.m, hp.zeta, kp, hp.q0, hp.dt);
    std::printf("natural frequency = %.12g rad per unit time\n", omega);
    if (hp.zeta < 1.0) {
        const double period = 2.0 * std::numbers::pi / (omega * std::sqrt(1.0 - hp.zeta * hp.zeta));
        std::printf("damped period = %.12g (%.6g steps)\n", period, period / hp.dt);
    } else {
        std::printf("%s: no oscillation\n", hp.zeta == 1.0 ? "critically damped" : "overdamped");
    }
    print_matrix("A", kernel.a);
    print_matrix("Sigma (unit diffusion)", kernel.sigma_unit);
    print_matrix("H", kernel.h);
    const Eigen::Vector2d moduli = eigenvalue_moduli(kernel.a);
    std::printf("eigenvalue moduli of A = %.12g, %.12g\n", moduli(0), moduli(1));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Particle attractor optimisation and baseline benchmark harness"};
    app.require_subcommand(1);

    Flags run_flags;
    auto* run = app.add_subcommand("run", "run one optimiser on one problem");
    run->add_option("--optimizer", run_flags.cli.optimizer, "pao, pso, qpso, de, sade");
    run->add_option("--problem", run_flags.cli.problem, "benchmark problem name");
    run->add_option("--dim", run_flags.cli.dim, "problem dimension (default 2)");
    run->add_option("--pop", run_flags.cli.pop, "population size (default 100)");
    run->add_option("--gens", run_flags.cli.gens, "generations (default 100)");
    run->add_option("--reps", run_flags.cli.reps, "repetitions (default 1)");
    run->add_option("--seed", run_flags.cli.seed, "base seed (default 0)");
    run->add_option("--out", run_flags.cli.out, "output JSONL path");
    add_pao_flags(run, run_flags);

    Flags bench_flags;
    auto* bench = app.add_subcommand("bench", "run the nine-problem comparison suite");
    bench->add_option("--suite", bench_flags.cli.suite, "2d, 8d or all (default 2d)");
    bench->add_option("--reps", bench_flags.cli.reps, "repetitions (default 20)");
    bench->add_option("--seed", bench_flags.cli.seed, "base seed (default 0)");
    bench->add_option("--pop", bench_flags.cli.pop, "population size (default 100)");
    bench->add_option("--gens", bench_flags.cli.gens, "generations (default 100)");
    bench->add_option("--optimizer", bench_flags.cli.optimizer, "comma-separated subset of optimisers");
    bench->add_option("--out", bench_flags.cli.out, "output directory");
    add_pao_flags(bench, bench_flags);

    std::string plot_in, plot_out;
    auto* plot = app.add_subcommand("plot-data", "aggregate JSONL records into per-problem CSV curves");
    plot->add_option("--in", plot_in, "directory of .jsonl files (or one file)")->required();
    plot->add_option("--out", plot_out, "output directory")->required();

    Hyperparams hp;
    std::string k_list = "1,1";
    auto* info = app.add_subcommand("kernel-info", "print A, Sigma, H and eigenvalue moduli");
    info->add_option("--m", hp.m, "inertia coefficient")->capture_default_str();
    info->add_option("--zeta", hp.zeta, "damping ratio")->capture_default_str();
    info->add_option("--k", k_list, "stiffnesses, comma separated")->capture_default_str();
    info->add_option("--q0", hp.q0, "stochastic scale")->capture_default_str();
    info->add_option("--dt", hp.dt, "integration interval")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_flags);
        if (bench->parsed()) return cmd_bench(bench_flags);
        if (plot->parsed()) return cmd_plot_data(plot_in, plot_out);
        if (info->parsed()) {
            hp.k = parse_number_list(k_list);
            return cmd_kernel_info(hp);
        }
    } catch (const pao::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
