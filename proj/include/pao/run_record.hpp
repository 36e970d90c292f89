#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pao/benchmarks.hpp"

namespace pao {

enum class OptimizerId { Pao, Pso, Qpso, De, Sade };

const std::vector<OptimizerId>& all_optimizers();
OptimizerId parse_optimizer(std::string_view s);
std::string_view to_string(OptimizerId id);
std::size_t optimizer_index(OptimizerId id);

struct GenerationEntry {
    int g = 0;
    double best = 0.0;
    double mean = 0.0;
    double shifted_best = 0.0;
    // In-memory only; not part of the JSONL schema.
    double nu = std::numeric_limits<double>::quiet_NaN();
    Eigen::VectorXd best_position;
};

/// Convergence history of one seeded optimiser run.
struct RunRecord {
    std::string run_id;
    OptimizerId optimizer = OptimizerId::Pao;
    std::string problem;
    int dim = 0;
    std::uint64_t seed = 0;
    int pop = 0;
    int gens = 0;
    std::size_t evals = 0;
    std::vector<GenerationEntry> history;
    double duration_ms = 0.0;

    /// Appends the entry for the current generation.
    void record(const Problem& problem, double best, const Eigen::VectorXd& fitness,
                const Eigen::VectorXd& best_position,
                double nu = std::numeric_limits<double>::quiet_NaN());

    double final_shifted_best() const { return history.back().shifted_best; }
};

/// Record with the identifying fields filled in and an empty history.
RunRecord make_record(OptimizerId id, const Problem& problem, int pop, int gens, std::uint64_t seed);

}  // namespace pao
