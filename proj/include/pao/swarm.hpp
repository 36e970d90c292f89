#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "pao/benchmarks.hpp"

namespace pao {

/// How positions leaving the problem box are treated.
enum class BoundsPolicy { None, Clip, Reflect };

BoundsPolicy parse_bounds_policy(std::string_view s);
std::string_view to_string(BoundsPolicy policy);

/// A particle row inside a column-major matrix, or a standalone row vector.
using RowRef = Eigen::Ref<Eigen::RowVectorXd, 0, Eigen::InnerStride<>>;

/// Population state. Rows are particles, columns are dimensions; position and
/// velocity together form the N x D x 2 state tensor.
struct Swarm {
    Eigen::MatrixXd position;
    Eigen::MatrixXd velocity;
    Eigen::VectorXd fitness;
    Eigen::MatrixXd local_best_pos;
    Eigen::VectorXd local_best_fit;
    Eigen::VectorXd global_best_pos;
    double global_best_fit = 0.0;
    int generation = 0;

    Eigen::Index size() const { return position.rows(); }
    Eigen::Index dim() const { return position.cols(); }

    /// Seeds the best archives from the current positions and fitness.
    void reset_bests();

    /// Strict-improvement update of local bests, then global best (first found wins).
    void update_bests();
};

/// Objective value of x; throws ObjectiveEvaluationFailure on a non-finite result.
double evaluate(const Problem& problem, const Eigen::VectorXd& x);

/// Evaluates every particle's current position into swarm.fitness.
void evaluate_swarm(Swarm& swarm, const Problem& problem);

/// Applies the policy to one particle's position (and, for reflect, velocity).
/// Clip leaves velocity untouched.
void apply_bounds(RowRef position, RowRef velocity,
                  const Problem& problem, BoundsPolicy policy);

/// Copy of the problem whose objective increments *counter on every call.
Problem with_counter(const Problem& problem, std::size_t* counter);

}  // namespace pao
