#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pao/optimizer.hpp"
#include "pao/run_record.hpp"

namespace pao {

struct BenchmarkSuite {
    std::vector<std::pair<std::string, int>> problems;  ///< (name, dim)
    int pop = 100;
    int gens = 100;
    int repetitions = 20;
    std::vector<OptimizerId> optimizers = all_optimizers();
    std::uint64_t base_seed = 0;
    OptimizerConfig config;
    ProblemOptions problem_options;

    void validate() const;

    /// All nine problems at 2, 8, or both dimensions ("2d", "8d", "all").
    static BenchmarkSuite standard(std::string_view which);
};

struct SummaryRow {
    OptimizerId optimizer = OptimizerId::Pao;
    std::string problem;
    int dim = 0;
    std::size_t runs = 0;
    double median = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
};

struct SuiteSummary {
    std::vector<RunRecord> records;
    std::vector<SummaryRow> rows;
};

/// Seed of one repetition; stable across suites so any run can be replayed alone.
std::uint64_t run_seed(std::uint64_t base_seed, OptimizerId id, std::string_view problem, int repetition);

/// Runs repetitions x optimisers x problems, streaming one JSONL record per run
/// to `jsonl_path`. With include_timing = false the duration field is omitted,
/// making output byte-identical for equal inputs.
SuiteSummary run_suite(const BenchmarkSuite& suite, const std::filesystem::path& jsonl_path,
                       bool include_timing = true);

/// Median / mean / sample stddev of final shifted best per (optimiser, problem, dim).
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path);

// JSONL persistence --------------------------------------------------------

nlohmann::json to_json(const RunRecord& record, bool include_timing = true);
RunRecord record_from_json(const nlohmann::json& j);
void write_jsonl(const std::vector<RunRecord>& records, const std::filesystem::path& path,
                 bool include_timing = true);
std::vector<RunRecord> read_jsonl(const std::filesystem::path& path);

// Convergence aggregation ----------------------------------------------------

struct CurveKey {
    std::string problem;
    int dim = 0;
    OptimizerId optimizer = OptimizerId::Pao;

    auto operator<=>(const CurveKey&) const = default;
};

struct ConvergenceCurve {
    std::size_t runs = 0;
    std::vector<double> mean;
    std::vector<double> median;
    std::vector<double> lower_quartile;
    std::vector<double> upper_quartile;
};

using CurveMap = std::map<CurveKey, ConvergenceCurve>;

/// Per-generation statistics of shifted best fitness, grouped by
/// (problem, dim, optimiser). Throws MismatchedHorizons when a group mixes
/// history lengths. Result does not depend on record order.
CurveMap aggregate_convergence(const std::vector<RunRecord>& records);

/// Writes <out_dir>/<problem>_<dim>d.csv for each problem with columns
/// generation,<optimizer>... holding the mean curves. Returns written paths.
std::vector<std::filesystem::path> emit_plot_data(const CurveMap& curves, const std::filesystem::path& out_dir);

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace pao
