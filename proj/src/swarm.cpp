#include "pao/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pao/error.hpp"

namespace pao {

BoundsPolicy parse_bounds_policy(std::string_view s) {
    const std::string key = to_lower(s);
    if (key == "none") return BoundsPolicy::None;
    if (key == "clip") return BoundsPolicy::Clip;
    if (key == "reflect") return BoundsPolicy::Reflect;
    throw InvalidConfig("unknown bounds policy: " + std::string(s));
}

std::string_view to_string(BoundsPolicy policy) {
    switch (policy) {
        case BoundsPolicy::None: return "none";
        case BoundsPolicy::Clip: return "clip";
        case BoundsPolicy::Reflect: return "reflect";
    }
    return "none";
}

void Swarm::reset_bests() {
    local_best_pos = position;
    local_best_fit = fitness;
    global_best_fit = std::numeric_limits<double>::infinity();
    global_best_pos = position.row(0).transpose();
    for (Eigen::Index i = 0; i < size(); ++i) {
        if (local_best_fit(i) < global_best_fit) {
            global_best_fit = local_best_fit(i);
            global_best_pos = local_best_pos.row(i).transpose();
        }
    }
}

void Swarm::update_bests() {
    for (Eigen::Index i = 0; i < size(); ++i) {
        if (fitness(i) < local_best_fit(i)) {
            local_best_fit(i) = fitness(i);
            local_best_pos.row(i) = position.row(i);
        }
    }
    for (Eigen::Index i = 0; i < size(); ++i) {
        if (local_best_fit(i) < global_best_fit) {
            global_best_fit = local_best_fit(i);
            global_best_pos = local_best_pos.row(i).transpose();
        }
    }
}

double evaluate(const Problem& problem, const Eigen::VectorXd& x) {
    const double value = problem.objective(x);
    if (!std::isfinite(value)) {
        throw ObjectiveEvaluationFailure("objective " + problem.name + " returned a non-finite value");
    }
    return value;
}

void evaluate_swarm(Swarm& swarm, const Problem& problem) {
    swarm.fitness.resize(swarm.size());
    for (Eigen::Index i = 0; i < swarm.size(); ++i) {
        swarm.fitness(i) = evaluate(problem, swarm.position.row(i).transpose());
    }
}

void apply_bounds(RowRef position, RowRef velocity,
                  const Problem& problem, BoundsPolicy policy) {
    if (policy == BoundsPolicy::None) return;
    for (Eigen::Index j = 0; j < position.size(); ++j) {
        const double lo = problem.lower(j);
        const double hi = problem.upper(j);
        double& x = position(j);
        if (x >= lo && x <= hi) continue;
        if (policy == BoundsPolicy::Reflect) {
            x = x < lo ? 2.0 * lo - x : 2.0 * hi - x;
            velocity(j) = -velocity(j);
        }
        // Clip, or a reflection that overshot the far wall.
        x = std::clamp(x, lo, hi);
    }
}

Problem with_counter(const Problem& problem, std::size_t* counter) {
    Problem counted = problem;
    counted.objective = [inner = problem.objective, counter](const Eigen::VectorXd& x) {
        ++*counter;
        return inner(x);
    };
    return counted;
}

}  // namespace pao
