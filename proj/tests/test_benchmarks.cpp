#include <cmath>

#include <gtest/gtest.h>

#include "pao/benchmarks.hpp"
#include "pao/error.hpp"
#include "pao/random.hpp"

using namespace pao;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) out(i++) = x;
    return out;
}

}  // namespace

TEST(Benchmarks, KnownValues) {
    EXPECT_EQ(make_problem("dejong", 5)(Eigen::VectorXd::Zero(5)), 0.0);
    EXPECT_EQ(make_problem("rosenbrock", 2)(vec({1.0, 1.0})), 0.0);
    EXPECT_EQ(make_problem("rosenbrock", 2)(vec({0.0, 0.0})), 1.0);
    EXPECT_NEAR(make_problem("ackley", 3)(Eigen::VectorXd::Zero(3)), 0.0, 1e-14);
    EXPECT_EQ(make_problem("rastrigin", 2)(vec({0.0, 0.0})), 0.0);
    EXPECT_EQ(make_problem("hyperellipsoid", 3)(vec({1.0, 1.0, 1.0})), 6.0);
    EXPECT_EQ(make_problem("rotatedhyperellipsoid", 3)(vec({1.0, 1.0, 1.0})), 6.0);
    EXPECT_EQ(make_problem("powersum", 2)(vec({0.5, 0.5})), 0.25 + 0.125);
}

TEST(Benchmarks, SchwefelOptimum) {
    const Problem p = make_problem("schwefel", 2);
    EXPECT_NEAR(p(vec({420.9687, 420.9687})), -837.9658, 1e-4);
    EXPECT_NEAR(p.optimum_val, -837.9658, 1e-4);
    EXPECT_NEAR(shift_to_zero(p, -837.9658), 0.0, 1e-4);
}

TEST(Benchmarks, ShiftToZero) {
    const Problem dejong = make_problem("dejong", 2);
    EXPECT_EQ(shift_to_zero(dejong, 3.25), 3.25);
    for (const auto& name : problem_names()) {
        const Problem p = make_problem(name, 4);
        EXPECT_EQ(shift_to_zero(p, p.optimum_val), 0.0) << name;
    }
}

TEST(Benchmarks, Domains) {
    const std::vector<std::pair<std::string, double>> widths{
        {"dejong", 5.12},      {"hyperellipsoid", 5.12}, {"rotatedhyperellipsoid", 65.54},
        {"powersum", 1.0},     {"rosenbrock", 2.048},    {"griewangk", 600.0},
        {"rastrigin", 5.12},   {"ackley", 32.77},        {"schwefel", 500.0}};
    for (const auto& [name, w] : widths) {
        const Problem p = make_problem(name, 3);
        EXPECT_EQ(p.lower, Eigen::VectorXd::Constant(3, -w)) << name;
        EXPECT_EQ(p.upper, Eigen::VectorXd::Constant(3, w)) << name;
    }
}

TEST(Benchmarks, OptimumAndLocalMinimality) {
    for (int dim : {1, 2, 8}) {
        for (const auto& name : problem_names()) {
            if (name == "rosenbrock" && dim < 2) continue;
            const Problem p = make_problem(name, dim);
            const double f_star = p(p.optimum_pos);
            const double tol = p.optimum_val == 0.0 ? 1e-9 : 1e-9 * std::abs(p.optimum_val);
            EXPECT_NEAR(f_star, p.optimum_val, tol) << name;
            for (int i = 0; i < dim; ++i) {
                for (double delta : {1e-3, -1e-3}) {
                    Eigen::VectorXd x = p.optimum_pos;
                    x(i) += delta;
                    EXPECT_GT(p(x), f_star) << name << " dim " << dim << " coord " << i << " delta " << delta;
                }
            }
        }
    }
}

TEST(Benchmarks, NonNegativeOnDomains) {
    Rng rng(11);
    for (const auto& name : problem_names()) {
        if (name == "schwefel" || name == "rosenbrock") continue;
        const Problem p = make_problem(name, 4);
        for (int trial = 0; trial < 2000; ++trial) {
            Eigen::VectorXd x(4);
            for (int j = 0; j < 4; ++j) x(j) = uniform(rng, p.lower(j), p.upper(j));
            const double v = p(x);
            ASSERT_TRUE(std::isfinite(v));
            ASSERT_GE(v, -1e-12) << name;
        }
    }
}

TEST(Benchmarks, CaseInsensitiveNames) {
    EXPECT_EQ(make_problem("DeJong", 2).name, "dejong");
    EXPECT_EQ(make_problem("RASTRIGIN", 2).name, "rastrigin");
}

TEST(Benchmarks, Errors) {
    EXPECT_THROW(make_problem("sphere", 2), UnknownProblem);
    EXPECT_THROW(make_problem("dejong", 0), InvalidDimension);
    EXPECT_THROW(make_problem("rosenbrock", 1), InvalidDimension);
}

TEST(Benchmarks, GriewangkDenominatorOption) {
    const Eigen::VectorXd x = vec({10.0, -5.0});
    const Problem printed = make_problem("griewangk", 2);
    const Problem literature = make_problem("griewangk", 2, ProblemOptions{4000.0});
    const double prod = std::cos(10.0) * std::cos(-5.0 / std::sqrt(2.0));
    EXPECT_NEAR(printed(x), 125.0 / 400.0 - prod + 1.0, 1e-14);
    EXPECT_NEAR(literature(x), 125.0 / 4000.0 - prod + 1.0, 1e-14);
}
