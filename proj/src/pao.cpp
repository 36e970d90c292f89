#include "pao/pao.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "pao/error.hpp"

namespace pao {

VelocityInit parse_velocity_init(std::string_view s) {
    const std::string key = to_lower(s);
    if (key == "zero") return VelocityInit::Zero;
    if (key == "uniform-scaled" || key == "uniform_scaled") return VelocityInit::UniformScaled;
    throw InvalidConfig("unknown velocity init: " + std::string(s));
}

std::string_view to_string(VelocityInit v) {
    return v == VelocityInit::Zero ? "zero" : "uniform-scaled";
}

void PaoConfig::validate() const {
    hp.validate();
    if (specs.size() != hp.k.size()) {
        throw InvalidConfig("PAO needs one stiffness per attractor (" + std::to_string(specs.size()) +
                            " attractors, " + std::to_string(hp.k.size()) + " stiffnesses)");
    }
}

NormalTensor draw_normals(Eigen::Index n, Eigen::Index d, Rng& rng) {
    NormalTensor t{Eigen::MatrixXd(n, d), Eigen::MatrixXd(n, d)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            t.position(i, j) = standard_normal(rng);
            t.velocity(i, j) = standard_normal(rng);
        }
    }
    return t;
}

Swarm initialize_swarm(const Problem& problem, int n, const PaoConfig& cfg, Rng& rng) {
    if (n < 1) throw InvalidConfig("population size must be >= 1");
    const int d = problem.dim;
    Swarm swarm;
    swarm.position.resize(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) swarm.position(i, j) = uniform(rng, problem.lower(j), problem.upper(j));

    swarm.velocity = Eigen::MatrixXd::Zero(n, d);
    if (cfg.velocity_init == VelocityInit::UniformScaled) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < d; ++j) {
                const double vmax = (problem.upper(j) - problem.lower(j)) / (2.0 * cfg.hp.dt);
                swarm.velocity(i, j) = uniform(rng, -vmax, vmax);
            }
        }
    }
    evaluate_swarm(swarm, problem);
    swarm.reset_bests();
    return swarm;
}

void advance_swarm(Swarm& swarm, const TransitionKernel& kernel, const Eigen::MatrixXd& centroid,
                   double noise_variance, const NormalTensor* draws, const PaoConfig& cfg,
                   const Problem& problem) {
    const Eigen::Matrix2d& a = kernel.a;
    const Eigen::MatrixXd rel = swarm.position - centroid;
    const Eigen::MatrixXd& vel = swarm.velocity;

    Eigen::MatrixXd next_rel = a(0, 0) * rel + a(0, 1) * vel;
    Eigen::MatrixXd next_vel = a(1, 0) * rel + a(1, 1) * vel;
    if (noise_variance > 0.0) {
        if (draws == nullptr) throw InvalidConfig("advance_swarm: normal draws required for noisy step");
        const double s = std::sqrt(noise_variance);
        const Eigen::Matrix2d& h = kernel.h;
        next_rel += (s * h(0, 0)) * draws->position + (s * h(0, 1)) * draws->velocity;
        next_vel += (s * h(1, 0)) * draws->position + (s * h(1, 1)) * draws->velocity;
    }

    swarm.position = next_rel + centroid;
    swarm.velocity = std::move(next_vel);
    for (Eigen::Index i = 0; i < swarm.size(); ++i) {
        apply_bounds(swarm.position.row(i), swarm.velocity.row(i), problem, cfg.bounds_policy);
    }
    evaluate_swarm(swarm, problem);
    swarm.update_bests();
    ++swarm.generation;
}

Swarm step_swarm(const Swarm& swarm, const TransitionKernel& kernel, const PaoConfig& cfg,
                 const Problem& problem, Rng& rng) {
    const AttractorSet aset = compute_attractors(swarm, cfg.specs, cfg.hp.k, rng);
    const Eigen::MatrixXd centroid = weighted_centroid(aset);
    const double variance = cfg.hp.q0 * noise_scale(swarm);

    Swarm next = swarm;
    if (variance > 0.0) {
        const NormalTensor draws = draw_normals(swarm.size(), swarm.dim(), rng);
        advance_swarm(next, kernel, centroid, variance, &draws, cfg, problem);
    } else {
        advance_swarm(next, kernel, centroid, 0.0, nullptr, cfg, problem);
    }
    return next;
}

RunRecord run_pao(const Problem& problem, int n, int generations, const PaoConfig& cfg,
                  std::uint64_t seed) {
    if (generations < 0) throw InvalidConfig("generations must be >= 0");
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();

    const TransitionKernel kernel = build_kernel(cfg.hp);
    std::size_t evals = 0;
    const Problem counted = with_counter(problem, &evals);
    Rng rng(seed);

    RunRecord rec = make_record(OptimizerId::Pao, problem, n, generations, seed);
    Swarm swarm = initialize_swarm(counted, n, cfg, rng);
    rec.record(problem, swarm.global_best_fit, swarm.fitness, swarm.global_best_pos, noise_scale(swarm));
    for (int g = 0; g < generations; ++g) {
        swarm = step_swarm(swarm, kernel, cfg, counted, rng);
        rec.record(problem, swarm.global_best_fit, swarm.fitness, swarm.global_best_pos, noise_scale(swarm));
    }

    rec.evals = evals;
    rec.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

}  // namespace pao
