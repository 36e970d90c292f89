#include <cmath>

#include "baseline_common.hpp"

namespace pao {

void BaselineConfig::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    auto probability = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!finite(pso.inertia_start) || !finite(pso.inertia_end) || !finite(pso.cognitive) ||
        !finite(pso.social) || !(pso.velocity_clamp > 0.0)) {
        throw InvalidConfig("invalid PSO parameters");
    }
    if (!finite(qpso.beta_start) || !finite(qpso.beta_end)) throw InvalidConfig("invalid QPSO parameters");
    if (!finite(de.f) || !probability(de.cr)) throw InvalidConfig("invalid DE parameters");
    if (sade.learning_period < 1 || !probability(sade.cr_mean) || !(sade.cr_stddev >= 0.0) ||
        !finite(sade.f_mean) || !(sade.f_stddev >= 0.0) || !probability(sade.min_strategy_probability) ||
        sade.min_strategy_probability > 0.5) {
        throw InvalidConfig("invalid SADE parameters");
    }
}

RunRecord run_pso(const Problem& problem, int n, int generations, const BaselineConfig& cfg,
                  std::uint64_t seed) {
    if (generations < 0) throw InvalidConfig("generations must be >= 0");
    cfg.validate();
    detail::RunTimer timer;
    std::size_t evals = 0;
    const Problem counted = with_counter(problem, &evals);
    Rng rng(seed);

    RunRecord rec = make_record(OptimizerId::Pso, problem, n, generations, seed);
    Swarm swarm = detail::random_population(counted, n, rng);
    rec.record(problem, swarm.global_best_fit, swarm.fitness, swarm.global_best_pos);

    const Eigen::RowVectorXd vmax = (cfg.pso.velocity_clamp * (problem.upper - problem.lower)).transpose();
    const PsoConfig& p = cfg.pso;
    for (int g = 0; g < generations; ++g) {
        const double w = detail::linear_schedule(p.inertia_start, p.inertia_end, g, generations);
        for (Eigen::Index i = 0; i < swarm.size(); ++i) {
            for (Eigen::Index j = 0; j < swarm.dim(); ++j) {
                const double r1 = uniform(rng, 0.0, 1.0);
                const double r2 = uniform(rng, 0.0, 1.0);
                const double x = swarm.position(i, j);
                double v = w * swarm.velocity(i, j) + p.cognitive * r1 * (swarm.local_best_pos(i, j) - x) +
                           p.social * r2 * (swarm.global_best_pos(j) - x);
                v = std::clamp(v, -vmax(j), vmax(j));
                swarm.velocity(i, j) = v;
                swarm.position(i, j) = x + v;
            }
            apply_bounds(swarm.position.row(i), swarm.velocity.row(i), counted, cfg.bounds_policy);
        }
        evaluate_swarm(swarm, counted);
        swarm.update_bests();
        ++swarm.generation;
        rec.record(problem, swarm.global_best_fit, swarm.fitness, swarm.global_best_pos);
    }

    rec.evals = evals;
    rec.duration_ms = timer.elapsed_ms();
    return rec;
}

}  // namespace pao
