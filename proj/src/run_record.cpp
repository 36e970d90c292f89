#include "pao/run_record.hpp"

#include <algorithm>

#include "pao/error.hpp"

namespace pao {

const std::vector<OptimizerId>& all_optimizers() {
    static const std::vector<OptimizerId> ids{OptimizerId::Pao, OptimizerId::Pso, OptimizerId::Qpso,
                                              OptimizerId::De, OptimizerId::Sade};
    return ids;
}

OptimizerId parse_optimizer(std::string_view s) {
    const std::string key = to_lower(s);
    for (OptimizerId id : all_optimizers()) {
        if (key == to_string(id)) return id;
    }
    throw InvalidConfig("unknown optimizer: " + std::string(s));
}

std::string_view to_string(OptimizerId id) {
    switch (id) {
        case OptimizerId::Pao: return "pao";
        case OptimizerId::Pso: return "pso";
        case OptimizerId::Qpso: return "qpso";
        case OptimizerId::De: return "de";
        case OptimizerId::Sade: return "sade";
    }
    return "pao";
}

std::size_t optimizer_index(OptimizerId id) {
    const auto& ids = all_optimizers();
    return static_cast<std::size_t>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

void RunRecord::record(const Problem& problem, double best, const Eigen::VectorXd& fitness,
                       const Eigen::VectorXd& best_position, double nu) {
    GenerationEntry entry;
    entry.g = static_cast<int>(history.size());
    entry.best = best;
    entry.mean = fitness.mean();
    entry.shifted_best = shift_to_zero(problem, best);
    entry.nu = nu;
    entry.best_position = best_position;
    history.push_back(std::move(entry));
}

RunRecord make_record(OptimizerId id, const Problem& problem, int pop, int gens, std::uint64_t seed) {
    RunRecord rec;
    rec.optimizer = id;
    rec.problem = problem.name;
    rec.dim = problem.dim;
    rec.seed = seed;
    rec.pop = pop;
    rec.gens = gens;
    rec.run_id = std::string(to_string(id)) + "-" + problem.name + "-" + std::to_string(problem.dim) +
                 "d-" + std::to_string(seed);
    rec.history.reserve(static_cast<std::size_t>(gens) + 1);
    return rec;
}

}  // namespace pao
