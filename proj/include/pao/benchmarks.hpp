#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace pao {

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// A box-constrained benchmark objective with a known minimiser.
struct Problem {
    std::string name;
    int dim = 0;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    Objective objective;
    Eigen::VectorXd optimum_pos;
    double optimum_val = 0.0;

    double operator()(const Eigen::VectorXd& x) const { return objective(x); }
};

struct ProblemOptions {
    /// Denominator of the quadratic term in Griewangk's function.
    double griewangk_denominator = 400.0;
};

/// Names accepted by make_problem, in canonical order.
const std::vector<std::string>& problem_names();

/// Builds one of the nine benchmark functions. Names are case-insensitive.
/// Throws UnknownProblem or InvalidDimension.
Problem make_problem(std::string_view name, int dim, const ProblemOptions& options = {});

/// Objective value relative to the known optimum.
inline double shift_to_zero(const Problem& problem, double value) {
    return value - problem.optimum_val;
}

/// Index of a problem name in problem_names(); throws UnknownProblem.
std::size_t problem_index(std::string_view name);

std::string to_lower(std::string_view s);

}  // namespace pao
