#include "pao/optimizer.hpp"

namespace pao {

RunRecord run_optimizer(OptimizerId id, const Problem& problem, int n, int generations,
                        const OptimizerConfig& cfg, std::uint64_t seed) {
    switch (id) {
        case OptimizerId::Pao: return run_pao(problem, n, generations, cfg.pao, seed);
        case OptimizerId::Pso: return run_pso(problem, n, generations, cfg.baselines, seed);
        case OptimizerId::Qpso: return run_qpso(problem, n, generations, cfg.baselines, seed);
        case OptimizerId::De: return run_de(problem, n, generations, cfg.baselines, seed);
        case OptimizerId::Sade: return run_sade(problem, n, generations, cfg.baselines, seed);
    }
    return run_pao(problem, n, generations, cfg.pao, seed);
}

}  // namespace pao
