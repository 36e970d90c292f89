#include <cmath>

#include "baseline_common.hpp"

namespace pao {

// Sun et al. quantum-behaved PSO: each element is resampled around a local
// attractor between its personal and global best, with a spread proportional
// to its distance from the mean personal best.
RunRecord run_qpso(const Problem& problem, int n, int generations, const BaselineConfig& cfg,
                   std::uint64_t seed) {
    if (generations < 0) throw InvalidConfig("generations must be >= 0");
    cfg.validate();
    detail::RunTimer timer;
    std::size_t evals = 0;
    const Problem counted = with_counter(problem, &evals);
    Rng rng(seed);

    RunRecord rec = make_record(OptimizerId::Qpso, problem, n, generations, seed);
    Swarm swarm = detail::random_population(counted, n, rng);
    rec.record(problem, swarm.global_best_fit, swarm.fitness, swarm.global_best_pos);

    for (int g = 0; g < generations; ++g) {
        const double beta = detail::linear_schedule(cfg.qpso.beta_start, cfg.qpso.beta_end, g, generations);
        const Eigen::RowVectorXd mbest = swarm.local_best_pos.colwise().mean();
        for (Eigen::Index i = 0; i < swarm.size(); ++i) {
            for (Eigen::Index j = 0; j < swarm.dim(); ++j) {
                const double phi = uniform(rng, 0.0, 1.0);
                const double u = 1.0 - uniform(rng, 0.0, 1.0);  // (0, 1]
                const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
                const double attractor = phi * swarm.local_best_pos(i, j) + (1.0 - phi) * swarm.global_best_pos(j);
                const double spread = beta * std::abs(mbest(j) - swarm.position(i, j)) * std::log(1.0 / u);
                swarm.position(i, j) = attractor + sign * spread;
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
