#include "baseline_common.hpp"

namespace pao {

RunRecord run_de(const Problem& problem, int n, int generations, const BaselineConfig& cfg,
                 std::uint64_t seed) {
    if (generations < 0) throw InvalidConfig("generations must be >= 0");
    cfg.validate();
    detail::require_population(n, 4, "DE rand/1/bin");
    detail::RunTimer timer;
    std::size_t evals = 0;
    const Problem counted = with_counter(problem, &evals);
    Rng rng(seed);

    RunRecord rec = make_record(OptimizerId::De, problem, n, generations, seed);
    Swarm pop = detail::random_population(counted, n, rng);
    rec.record(problem, pop.global_best_fit, pop.fitness, pop.global_best_pos);

    const Eigen::Index dim = pop.dim();
    std::uniform_int_distribution<Eigen::Index> pick_dim(0, dim - 1);
    for (int g = 0; g < generations; ++g) {
        const Eigen::MatrixXd parents = pop.position;
        for (Eigen::Index i = 0; i < pop.size(); ++i) {
            const auto [r1, r2, r3] = detail::pick_distinct<3>(pop.size(), i, rng);
            const Eigen::Index forced = pick_dim(rng);
            Eigen::RowVectorXd trial = parents.row(i);
            for (Eigen::Index j = 0; j < dim; ++j) {
                if (j == forced || uniform(rng, 0.0, 1.0) < cfg.de.cr) {
                    trial(j) = parents(r1, j) + cfg.de.f * (parents(r2, j) - parents(r3, j));
                }
            }
            Eigen::RowVectorXd unused = Eigen::RowVectorXd::Zero(dim);
            apply_bounds(trial, unused, counted, cfg.bounds_policy);
            const double f = evaluate(counted, trial.transpose());
            if (f <= pop.fitness(i)) {
                pop.position.row(i) = trial;
                pop.fitness(i) = f;
            }
        }
        pop.update_bests();
        ++pop.generation;
        rec.record(problem, pop.global_best_fit, pop.fitness, pop.global_best_pos);
    }

    rec.evals = evals;
    rec.duration_ms = timer.elapsed_ms();
    return rec;
}

}  // namespace pao
