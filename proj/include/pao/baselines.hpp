#pragma once

#include <cstdint>

#include "pao/benchmarks.hpp"
#include "pao/run_record.hpp"
#include "pao/swarm.hpp"

namespace pao {

/// Inertia-weight PSO (Shi & Eberhart form).
struct PsoConfig {
    double inertia_start = 0.9;
    double inertia_end = 0.4;
    double cognitive = 2.0;
    double social = 2.0;
    double velocity_clamp = 0.5;  ///< fraction of the domain width
};

/// Quantum-behaved PSO; contraction-expansion coefficient decays linearly.
struct QpsoConfig {
    double beta_start = 1.0;
    double beta_end = 0.5;
};

struct DeConfig {
    double f = 0.5;
    double cr = 0.9;
};

/// Self-adaptive DE with a rand/1/bin and current-to-best/2/bin pool.
struct SadeConfig {
    int learning_period = 10;
    double cr_mean = 0.5;
    double cr_stddev = 0.1;
    double f_mean = 0.5;
    double f_stddev = 0.3;
    double min_strategy_probability = 0.05;
};

struct BaselineConfig {
    PsoConfig pso;
    QpsoConfig qpso;
    DeConfig de;
    SadeConfig sade;
    BoundsPolicy bounds_policy = BoundsPolicy::Clip;

    void validate() const;
};

RunRecord run_pso(const Problem& problem, int n, int generations, const BaselineConfig& cfg, std::uint64_t seed);
RunRecord run_qpso(const Problem& problem, int n, int generations, const BaselineConfig& cfg, std::uint64_t seed);
RunRecord run_de(const Problem& problem, int n, int generations, const BaselineConfig& cfg, std::uint64_t seed);
RunRecord run_sade(const Problem& problem, int n, int generations, const BaselineConfig& cfg, std::uint64_t seed);

}  // namespace pao
