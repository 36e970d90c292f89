#include "pao/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>

#include "pao/error.hpp"

namespace pao {
namespace {

using nlohmann::json;

std::ofstream open_output(const std::filesystem::path& path) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
    return out;
}

void check_stream(const std::ofstream& out, const std::filesystem::path& path) {
    if (!out) throw IoFailure("write failed: " + path.string());
}

// Linear-interpolated quantile of sorted data.
double quantile(const std::vector<double>& sorted, double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double sorted_sum(const std::vector<double>& sorted) {
    return std::accumulate(sorted.begin(), sorted.end(), 0.0);
}

}  // namespace

void BenchmarkSuite::validate() const {
    if (repetitions < 1) throw InvalidConfig("repetitions must be >= 1");
    if (pop < 1) throw InvalidConfig("population size must be >= 1");
    if (gens < 0) throw InvalidConfig("generations must be >= 0");
    if (problems.empty()) throw InvalidConfig("suite has no problems");
    if (optimizers.empty()) throw InvalidConfig("suite has no optimizers");
}

BenchmarkSuite BenchmarkSuite::standard(std::string_view which) {
    const std::string key = to_lower(which);
    std::vector<int> dims;
    if (key == "2d") dims = {2};
    else if (key == "8d") dims = {8};
    else if (key == "all") dims = {2, 8};
    else throw InvalidConfig("unknown suite: " + std::string(which) + " (expected 2d, 8d or all)");

    BenchmarkSuite suite;
    for (int d : dims)
        for (const auto& name : problem_names()) suite.problems.emplace_back(name, d);
    return suite;
}

std::uint64_t run_seed(std::uint64_t base_seed, OptimizerId id, std::string_view problem, int repetition) {
    return derive_seed(base_seed, optimizer_index(id), problem_index(problem),
                       static_cast<std::uint64_t>(repetition));
}

SuiteSummary run_suite(const BenchmarkSuite& suite, const std::filesystem::path& jsonl_path,
                       bool include_timing) {
    suite.validate();
    std::ofstream out = open_output(jsonl_path);
    SuiteSummary summary;
    for (const auto& [name, dim] : suite.problems) {
        const Problem problem = make_problem(name, dim, suite.problem_options);
        for (OptimizerId id : suite.optimizers) {
            for (int rep = 0; rep < suite.repetitions; ++rep) {
                const std::uint64_t seed = run_seed(suite.base_seed, id, problem.name, rep);
                RunRecord rec = run_optimizer(id, problem, suite.pop, suite.gens, suite.config, seed);
                rec.run_id = std::string(to_string(id)) + "-" + problem.name + "-" + std::to_string(dim) +
                             "d-r" + std::to_string(rep);
                out << to_json(rec, include_timing).dump() << '\n';
                check_stream(out, jsonl_path);
                summary.records.push_back(std::move(rec));
            }
        }
    }
    out.flush();
    check_stream(out, jsonl_path);
    summary.rows = summarize(summary.records);
    return summary;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    std::map<CurveKey, std::vector<double>> finals;
    for (const auto& r : records) {
        if (r.history.empty()) continue;
        finals[{r.problem, r.dim, r.optimizer}].push_back(r.final_shifted_best());
    }
    std::vector<SummaryRow> rows;
    for (auto& [key, values] : finals) {
        std::sort(values.begin(), values.end());
        SummaryRow row;
        row.optimizer = key.optimizer;
        row.problem = key.problem;
        row.dim = key.dim;
        row.runs = values.size();
        row.median = quantile(values, 0.5);
        row.mean = sorted_sum(values) / static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) ss += (v - row.mean) * (v - row.mean);
        row.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "optimizer,problem,dim,runs,median,mean,stddev\n";
    for (const auto& r : rows) {
        out << to_string(r.optimizer) << ',' << r.problem << ',' << r.dim << ',' << r.runs << ','
            << format_double(r.median) << ',' << format_double(r.mean) << ',' << format_double(r.stddev)
            << '\n';
    }
    check_stream(out, path);
}

json to_json(const RunRecord& record, bool include_timing) {
    json history = json::array();
    for (const auto& e : record.history) {
        history.push_back({{"g", e.g}, {"best", e.best}, {"mean", e.mean}, {"shifted_best", e.shifted_best}});
    }
    json j{{"run_id", record.run_id},
           {"optimizer", std::string(to_string(record.optimizer))},
           {"problem", record.problem},
           {"dim", record.dim},
           {"seed", record.seed},
           {"pop", record.pop},
           {"gens", record.gens},
           {"evals", record.evals},
           {"history", std::move(history)}};
    if (include_timing) j["duration_ms"] = record.duration_ms;
    return j;
}

RunRecord record_from_json(const json& j) {
    try {
        RunRecord r;
        r.run_id = j.at("run_id").get<std::string>();
        r.optimizer = parse_optimizer(j.at("optimizer").get<std::string>());
        r.problem = j.at("problem").get<std::string>();
        r.dim = j.at("dim").get<int>();
        r.seed = j.at("seed").get<std::uint64_t>();
        r.pop = j.at("pop").get<int>();
        r.gens = j.at("gens").get<int>();
        r.evals = j.at("evals").get<std::size_t>();
        for (const auto& e : j.at("history")) {
            GenerationEntry entry;
            entry.g = e.at("g").get<int>();
            entry.best = e.at("best").get<double>();
            entry.mean = e.at("mean").get<double>();
            entry.shifted_best = e.at("shifted_best").get<double>();
            r.history.push_back(std::move(entry));
        }
        if (j.contains("duration_ms")) r.duration_ms = j.at("duration_ms").get<double>();
        return r;
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("malformed run record: ") + e.what());
    }
}

void write_jsonl(const std::vector<RunRecord>& records, const std::filesystem::path& path, bool include_timing) {
    std::ofstream out = open_output(path);
    for (const auto& r : records) out << to_json(r, include_timing).dump() << '\n';
    check_stream(out, path);
}

std::vector<RunRecord> read_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open " + path.string());
    std::vector<RunRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw InvalidConfig("malformed JSONL line in " + path.string() + ": " + e.what());
        }
        records.push_back(record_from_json(j));
    }
    return records;
}

CurveMap aggregate_convergence(const std::vector<RunRecord>& records) {
    std::map<CurveKey, std::vector<const RunRecord*>> groups;
    for (const auto& r : records) groups[{r.problem, r.dim, r.optimizer}].push_back(&r);

    CurveMap curves;
    for (const auto& [key, members] : groups) {
        const std::size_t length = members.front()->history.size();
        for (const RunRecord* r : members) {
            if (r->history.size() != length) {
                throw MismatchedHorizons("records for " + std::string(to_string(key.optimizer)) + "/" +
                                         key.problem + " have different generation counts");
            }
        }
        ConvergenceCurve curve;
        curve.runs = members.size();
        std::vector<double> column(members.size());
        for (std::size_t g = 0; g < length; ++g) {
            for (std::size_t i = 0; i < members.size(); ++i) column[i] = members[i]->history[g].shifted_best;
            // Sorting first makes the floating-point sum independent of record order.
            std::sort(column.begin(), column.end());
            curve.mean.push_back(sorted_sum(column) / static_cast<double>(column.size()));
            curve.median.push_back(quantile(column, 0.5));
            curve.lower_quartile.push_back(quantile(column, 0.25));
            curve.upper_quartile.push_back(quantile(column, 0.75));
        }
        curves.emplace(key, std::move(curve));
    }
    return curves;
}

std::vector<std::filesystem::path> emit_plot_data(const CurveMap& curves, const std::filesystem::path& out_dir) {
    std::map<std::pair<std::string, int>, std::vector<std::pair<OptimizerId, const ConvergenceCurve*>>> by_problem;
    for (const auto& [key, curve] : curves) by_problem[{key.problem, key.dim}].emplace_back(key.optimizer, &curve);

    std::vector<std::filesystem::path> written;
    for (auto& [problem, columns] : by_problem) {
        std::sort(columns.begin(), columns.end(), [](const auto& a, const auto& b) {
            return optimizer_index(a.first) < optimizer_index(b.first);
        });
        const std::size_t length = columns.front().second->mean.size();
        for (const auto& col : columns) {
            if (col.second->mean.size() != length) {
                throw MismatchedHorizons("optimizers on " + problem.first + " have different generation counts");
            }
        }
        const auto path = out_dir / (problem.first + "_" + std::to_string(problem.second) + "d.csv");
        std::ofstream out = open_output(path);
        out << "generation";
        for (const auto& col : columns) out << ',' << to_string(col.first);
        out << '\n';
        for (std::size_t g = 0; g < length; ++g) {
            out << g;
            for (const auto& col : columns) out << ',' << format_double(col.second->mean[g]);
            out << '\n';
        }
        check_stream(out, path);
        written.push_back(path);
    }
    return written;
}

std::string format_double(double value) {
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

}  // namespace pao
