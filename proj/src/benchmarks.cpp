#include "pao/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pao/error.hpp"

namespace pao {
namespace {

using Eigen::VectorXd;

constexpr double kSchwefelOptimum = 420.968746;

double dejong(const VectorXd& x) { return x.squaredNorm(); }

double hyper_ellipsoid(const VectorXd& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) sum += static_cast<double>(i + 1) * x(i) * x(i);
    return sum;
}

double rotated_hyper_ellipsoid(const VectorXd& x) {
    double sum = 0.0;
    double partial = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        partial += x(i) * x(i);
        sum += partial;
    }
    return sum;
}

double power_sum(const VectorXd& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x(i)), static_cast<double>(i + 2));
    return sum;
}

double rosenbrock(const VectorXd& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double a = x(i + 1) - x(i) * x(i);
        const double b = 1.0 - x(i);
        sum += 100.0 * a * a + b * b;
    }
    return sum;
}

double griewangk(const VectorXd& x, double denominator) {
    double sum = 0.0;
    double prod = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        sum += x(i) * x(i);
        prod *= std::cos(x(i) / std::sqrt(static_cast<double>(i + 1)));
    }
    return sum / denominator - prod + 1.0;
}

double rastrigin(const VectorXd& x) {
    double sum = 10.0 * static_cast<double>(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        sum += x(i) * x(i) - 10.0 * std::cos(2.0 * std::numbers::pi * x(i));
    }
    return sum;
}

double ackley(const VectorXd& x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        sq += x(i) * x(i);
        cs += std::cos(2.0 * std::numbers::pi * x(i));
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double schwefel(const VectorXd& x) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) sum -= x(i) * std::sin(std::sqrt(std::abs(x(i))));
    return sum;
}

Problem symmetric_box(std::string name, int dim, double half_width, Objective f, double optimum_coord) {
    Problem p;
    p.name = std::move(name);
    p.dim = dim;
    p.lower = VectorXd::Constant(dim, -half_width);
    p.upper = VectorXd::Constant(dim, half_width);
    p.objective = std::move(f);
    p.optimum_pos = VectorXd::Constant(dim, optimum_coord);
    p.optimum_val = 0.0;
    return p;
}

void check_optimum(const Problem& p) {
    const double value = p.objective(p.optimum_pos);
    const double tol = p.optimum_val == 0.0 ? 1e-9 : 1e-9 * std::abs(p.optimum_val);
    if (!(std::abs(value - p.optimum_val) <= tol)) {
        std::ostringstream msg;
        msg << "problem " << p.name << ": objective at optimum is " << value << ", expected "
            << p.optimum_val;
        throw NumericalFailure(msg.str());
    }
}

}  // namespace

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

const std::vector<std::string>& problem_names() {
    static const std::vector<std::string> names{
        "dejong",     "hyperellipsoid", "rotatedhyperellipsoid", "powersum", "rosenbrock",
        "griewangk",  "rastrigin",      "ackley",                "schwefel"};
    return names;
}

std::size_t problem_index(std::string_view name) {
    const std::string key = to_lower(name);
    const auto& names = problem_names();
    const auto it = std::find(names.begin(), names.end(), key);
    if (it == names.end()) throw UnknownProblem("unknown problem: " + std::string(name));
    return static_cast<std::size_t>(it - names.begin());
}

Problem make_problem(std::string_view name, int dim, const ProblemOptions& options) {
    const std::string key = to_lower(name);
    const std::size_t index = problem_index(key);
    if (dim < 1 || (key == "rosenbrock" && dim < 2)) {
        throw InvalidDimension("invalid dimension " + std::to_string(dim) + " for problem " + key);
    }
    if (!(options.griewangk_denominator > 0.0)) {
        throw InvalidConfig("griewangk_denominator must be > 0");
    }

    Problem p;
    switch (index) {
        case 0: p = symmetric_box(key, dim, 5.12, dejong, 0.0); break;
        case 1: p = symmetric_box(key, dim, 5.12, hyper_ellipsoid, 0.0); break;
        case 2: p = symmetric_box(key, dim, 65.54, rotated_hyper_ellipsoid, 0.0); break;
        case 3: p = symmetric_box(key, dim, 1.0, power_sum, 0.0); break;
        case 4: p = symmetric_box(key, dim, 2.048, rosenbrock, 1.0); break;
        case 5: {
            const double denom = options.griewangk_denominator;
            p = symmetric_box(key, dim, 600.0, [denom](const VectorXd& x) { return griewangk(x, denom); }, 0.0);
            break;
        }
        case 6: p = symmetric_box(key, dim, 5.12, rastrigin, 0.0); break;
        case 7: p = symmetric_box(key, dim, 32.77, ackley, 0.0); break;
        default:
            p = symmetric_box(key, dim, 500.0, schwefel, kSchwefelOptimum);
            p.optimum_val = schwefel(p.optimum_pos);
            break;
    }
    check_optimum(p);
    return p;
}

}  // namespace pao
