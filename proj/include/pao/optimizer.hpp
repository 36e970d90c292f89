#pragma once

#include <cstdint>

#include "pao/baselines.hpp"
#include "pao/pao.hpp"
#include "pao/run_record.hpp"

namespace pao {

struct OptimizerConfig {
    PaoConfig pao;
    BaselineConfig baselines;
};

/// Dispatches to run_pao / run_pso / run_qpso / run_de / run_sade.
RunRecord run_optimizer(OptimizerId id, const Problem& problem, int n, int generations,
                        const OptimizerConfig& cfg, std::uint64_t seed);

}  // namespace pao
