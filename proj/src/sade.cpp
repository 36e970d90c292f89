#include <algorithm>

#include "baseline_common.hpp"

namespace pao {
namespace {

enum Strategy : int { kRand1 = 0, kCurrentToBest2 = 1 };

}  // namespace

// Qin & Suganthan self-adaptive DE. Strategy probabilities are re-estimated
// from success/failure counts every learning period.
RunRecord run_sade(const Problem& problem, int n, int generations, const BaselineConfig& cfg,
                   std::uint64_t seed) {
    if (generations < 0) throw InvalidConfig("generations must be >= 0");
    cfg.validate();
    detail::require_population(n, 5, "SADE");
    detail::RunTimer timer;
    std::size_t evals = 0;
    const Problem counted = with_counter(problem, &evals);
    Rng rng(seed);
    const SadeConfig& sc = cfg.sade;

    RunRecord rec = make_record(OptimizerId::Sade, problem, n, generations, seed);
    Swarm pop = detail::random_population(counted, n, rng);
    rec.record(problem, pop.global_best_fit, pop.fitness, pop.global_best_pos);

    const Eigen::Index dim = pop.dim();
    std::uniform_int_distribution<Eigen::Index> pick_dim(0, dim - 1);
    std::normal_distribution<double> cr_dist(sc.cr_mean, sc.cr_stddev);
    std::normal_distribution<double> f_dist(sc.f_mean, sc.f_stddev);

    double p_rand1 = 0.5;
    std::array<int, 2> successes{0, 0};
    std::array<int, 2> failures{0, 0};

    for (int g = 0; g < generations; ++g) {
        const Eigen::MatrixXd parents = pop.position;
        const Eigen::RowVectorXd best = pop.global_best_pos.transpose();
        for (Eigen::Index i = 0; i < pop.size(); ++i) {
            const int strategy = uniform(rng, 0.0, 1.0) < p_rand1 ? kRand1 : kCurrentToBest2;
            double f;
            do { f = f_dist(rng); } while (!(f > 0.0));
            const double cr = std::clamp(cr_dist(rng), 0.0, 1.0);

            Eigen::RowVectorXd donor;
            if (strategy == kRand1) {
                const auto [r1, r2, r3] = detail::pick_distinct<3>(pop.size(), i, rng);
                donor = parents.row(r1) + f * (parents.row(r2) - parents.row(r3));
            } else {
                const auto [r1, r2, r3, r4] = detail::pick_distinct<4>(pop.size(), i, rng);
                donor = parents.row(i) + f * (best - parents.row(i)) + f * (parents.row(r1) - parents.row(r2)) +
                        f * (parents.row(r3) - parents.row(r4));
            }
            const Eigen::Index forced = pick_dim(rng);
            Eigen::RowVectorXd trial = parents.row(i);
            for (Eigen::Index j = 0; j < dim; ++j) {
                if (j == forced || uniform(rng, 0.0, 1.0) < cr) trial(j) = donor(j);
            }
            Eigen::RowVectorXd unused = Eigen::RowVectorXd::Zero(dim);
            apply_bounds(trial, unused, counted, cfg.bounds_policy);
            const double value = evaluate(counted, trial.transpose());
            if (value <= pop.fitness(i)) {
                ++successes[strategy];
                pop.position.row(i) = trial;
                pop.fitness(i) = value;
            } else {
                ++failures[strategy];
            }
        }
        pop.update_bests();
        ++pop.generation;
        rec.record(problem, pop.global_best_fit, pop.fitness, pop.global_best_pos);

        if ((g + 1) % sc.learning_period == 0) {
            const double ns1 = successes[kRand1], nf1 = failures[kRand1];
            const double ns2 = successes[kCurrentToBest2], nf2 = failures[kCurrentToBest2];
            const double denom = ns2 * (ns1 + nf1) + ns1 * (ns2 + nf2);
            if (denom > 0.0) p_rand1 = ns1 * (ns2 + nf2) / denom;
            p_rand1 = std::clamp(p_rand1, sc.min_strategy_probability, 1.0 - sc.min_strategy_probability);
            successes = {0, 0};
            failures = {0, 0};
        }
    }

    rec.evals = evals;
    rec.duration_ms = timer.elapsed_ms();
    return rec;
}

}  // namespace pao
