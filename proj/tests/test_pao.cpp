#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pao/benchmarks.hpp"
#include "pao/error.hpp"
#include "pao/pao.hpp"

using namespace pao;

namespace {

PaoConfig global_best_only(double q0) {
    PaoConfig cfg;
    cfg.specs = {AttractorSpec::global_best()};
    cfg.hp.k = {1.0};
    cfg.hp.q0 = q0;
    return cfg;
}

Problem shifted(const Problem& p, const Eigen::VectorXd& v) {
    Problem out = p;
    out.lower = p.lower + v;
    out.upper = p.upper + v;
    auto f = p.objective;
    out.objective = [f, v](const Eigen::VectorXd& x) { return f(x - v); };
    out.optimum_pos = p.optimum_pos + v;
    return out;
}

}  // namespace

TEST(InitializeSwarm, SingleParticleZeroVelocity) {
    const Problem p = make_problem("dejong", 3);
    Rng rng(1);
    const Swarm s = initialize_swarm(p, 1, PaoConfig{}, rng);
    EXPECT_EQ(s.size(), 1);
    EXPECT_TRUE(s.velocity.isZero(0.0));
    EXPECT_EQ(s.global_best_fit, s.fitness(0));
}

TEST(InitializeSwarm, PositionsInsideDomain) {
    const Problem p = make_problem("dejong", 2);
    Rng rng(2);
    const Swarm s = initialize_swarm(p, 100, PaoConfig{}, rng);
    EXPECT_GE(s.position.minCoeff(), -5.12);
    EXPECT_LE(s.position.maxCoeff(), 5.12);
    EXPECT_EQ(s.global_best_fit, s.local_best_fit.minCoeff());
    EXPECT_EQ(s.local_best_pos, s.position);
}

TEST(InitializeSwarm, UniformScaledVelocity) {
    const Problem p = make_problem("schwefel", 4);
    PaoConfig cfg;
    cfg.velocity_init = VelocityInit::UniformScaled;
    cfg.hp.dt = 0.5;
    Rng rng(3);
    const Swarm s = initialize_swarm(p, 200, cfg, rng);
    const double limit = (p.upper(0) - p.lower(0)) / (2.0 * cfg.hp.dt);
    EXPECT_LE(s.velocity.cwiseAbs().maxCoeff(), limit);
    EXPECT_GT(s.velocity.cwiseAbs().maxCoeff(), 0.5 * limit);
}

TEST(InitializeSwarm, Deterministic) {
    const Problem p = make_problem("ackley", 5);
    Rng a(99), b(99);
    const Swarm s1 = initialize_swarm(p, 20, PaoConfig{}, a);
    const Swarm s2 = initialize_swarm(p, 20, PaoConfig{}, b);
    EXPECT_EQ(s1.position, s2.position);
    EXPECT_EQ(s1.fitness, s2.fitness);
}

TEST(StepSwarm, FixedPointAtAttractor) {
    const Problem p = make_problem("rastrigin", 3);
    const PaoConfig cfg = global_best_only(0.0);
    Swarm s;
    s.position = Eigen::RowVector3d(0.7, -1.3, 2.2);
    s.velocity = Eigen::MatrixXd::Zero(1, 3);
    evaluate_swarm(s, p);
    s.reset_bests();
    const Swarm start = s;
    const TransitionKernel kernel = build_kernel(cfg.hp);
    Rng rng(0);
    for (int g = 0; g < 25; ++g) s = step_swarm(s, kernel, cfg, p, rng);
    EXPECT_EQ(s.position, start.position);
    EXPECT_EQ(s.velocity, start.velocity);
    EXPECT_EQ(s.generation, 25);
}

TEST(StepSwarm, DampedEnvelope) {
    PaoConfig cfg = global_best_only(0.0);
    cfg.hp.zeta = 0.2;
    cfg.bounds_policy = BoundsPolicy::None;
    const double omega = std::sqrt(cfg.hp.total_stiffness() / cfg.hp.m);
    const double period = 2.0 * std::numbers::pi / (omega * std::sqrt(1.0 - cfg.hp.zeta * cfg.hp.zeta));
    cfg.hp.dt = period / 200.0;

    const Problem p = make_problem("dejong", 1);
    const TransitionKernel kernel = build_kernel(cfg.hp);
    Swarm s;
    s.position = Eigen::MatrixXd::Constant(1, 1, 1.0);
    s.velocity = Eigen::MatrixXd::Zero(1, 1);
    evaluate_swarm(s, p);
    s.reset_bests();
    const Eigen::MatrixXd attractor = Eigen::MatrixXd::Zero(1, 1);

    std::vector<double> xs{1.0};
    for (int t = 0; t < 1000; ++t) {
        advance_swarm(s, kernel, attractor, 0.0, nullptr, cfg, p);
        xs.push_back(s.position(0, 0));
    }
    std::vector<double> peaks{xs.front()};
    for (std::size_t t = 1; t + 1 < xs.size(); ++t)
        if (xs[t] > xs[t - 1] && xs[t] >= xs[t + 1] && xs[t] > 0.0) peaks.push_back(xs[t]);
    ASSERT_GE(peaks.size(), 3u);
    const double expected = std::exp(-2.0 * std::numbers::pi * cfg.hp.zeta / std::sqrt(1.0 - cfg.hp.zeta * cfg.hp.zeta));
    for (std::size_t i = 1; i < peaks.size(); ++i)
        EXPECT_NEAR(peaks[i] / peaks[i - 1], expected, 0.1 * expected) << "peak " << i;
    // Overshoot past the attractor.
    EXPECT_LT(*std::min_element(xs.begin(), xs.end()), 0.0);
}

TEST(StepSwarm, MatchesPerElementUpdate) {
    const Problem p = make_problem("rastrigin", 4);
    Rng hp_rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        PaoConfig cfg;
        cfg.hp = oracle::random_hyperparams(hp_rng);
        cfg.specs.assign(cfg.hp.k.size(), AttractorSpec::global_best());
        if (cfg.hp.k.size() >= 2) cfg.specs[1] = AttractorSpec::local_best();
        if (cfg.hp.k.size() == 3) cfg.specs[2] = {AttractorKind::DERand1Bin, 0.0};
        cfg.bounds_policy = trial % 2 == 0 ? BoundsPolicy::None : BoundsPolicy::Reflect;

        Rng init(trial);
        Swarm fast = initialize_swarm(p, 10, cfg, init);
        Swarm slow = fast;
        const TransitionKernel kernel = build_kernel(cfg.hp);
        Rng r1(500 + trial), r2(500 + trial);
        for (int g = 0; g < 10; ++g) {
            fast = step_swarm(fast, kernel, cfg, p, r1);
            oracle::naive_step(slow, cfg, p, r2);
            const double scale = std::max(1.0, slow.position.cwiseAbs().maxCoeff());
            ASSERT_LT((fast.position - slow.position).cwiseAbs().maxCoeff(), 1e-12 * scale) << "gen " << g;
            ASSERT_LT((fast.velocity - slow.velocity).cwiseAbs().maxCoeff(),
                      1e-12 * std::max(1.0, slow.velocity.cwiseAbs().maxCoeff()));
        }
    }
}

TEST(StepSwarm, ClipKeepsPositionsInDomain) {
    const Problem p = make_problem("ackley", 3);
    PaoConfig cfg;
    cfg.hp.q0 = 50.0;
    cfg.velocity_init = VelocityInit::UniformScaled;
    Rng rng(5);
    Swarm s = initialize_swarm(p, 30, cfg, rng);
    const TransitionKernel kernel = build_kernel(cfg.hp);
    for (int g = 0; g < 30; ++g) {
        s = step_swarm(s, kernel, cfg, p, rng);
        for (Eigen::Index j = 0; j < s.dim(); ++j) {
            EXPECT_GE(s.position.col(j).minCoeff(), p.lower(j));
            EXPECT_LE(s.position.col(j).maxCoeff(), p.upper(j));
        }
    }
}

TEST(StepSwarm, ReflectMirrorsAndNegatesVelocity) {
    const Problem p = make_problem("dejong", 2);
    Eigen::RowVectorXd pos(2), vel(2);
    pos << 6.12, -5.62;
    vel << 1.0, -2.0;
    apply_bounds(pos, vel, p, BoundsPolicy::Reflect);
    EXPECT_NEAR(pos(0), 4.12, 1e-12);
    EXPECT_NEAR(pos(1), -4.62, 1e-12);
    EXPECT_EQ(vel(0), -1.0);
    EXPECT_EQ(vel(1), 2.0);

    pos << 6.0, 0.0;
    vel << 1.0, 1.0;
    apply_bounds(pos, vel, p, BoundsPolicy::Clip);
    EXPECT_EQ(pos(0), 5.12);
    EXPECT_EQ(vel(0), 1.0);
}

TEST(StepSwarm, NonFiniteObjectiveIsAnError) {
    Problem p = make_problem("dejong", 2);
    p.objective = [](const Eigen::VectorXd& x) { return x(0) > 0.0 ? std::nan("") : x.squaredNorm(); };
    EXPECT_THROW(run_pao(p, 20, 5, PaoConfig{}, 1), ObjectiveEvaluationFailure);
}

TEST(RunPao, ZeroGenerations) {
    const Problem p = make_problem("rosenbrock", 2);
    const RunRecord r = run_pao(p, 17, 0, PaoConfig{}, 3);
    ASSERT_EQ(r.history.size(), 1u);
    EXPECT_EQ(r.evals, 17u);
    EXPECT_EQ(r.history[0].g, 0);
}

TEST(RunPao, EvaluationCountAndMonotoneBest) {
    for (const std::string& name : problem_names()) {
        const Problem p = make_problem(name, 2);
        const RunRecord r = run_pao(p, 12, 15, PaoConfig{}, 42);
        EXPECT_EQ(r.evals, 12u * 16u) << name;
        ASSERT_EQ(r.history.size(), 16u);
        for (std::size_t g = 1; g < r.history.size(); ++g) EXPECT_LE(r.history[g].best, r.history[g - 1].best) << name;
        for (const auto& e : r.history) {
            EXPECT_GE(e.nu, 0.0);
            EXPECT_LE(e.best, e.mean);
        }
    }
}

TEST(RunPao, Deterministic) {
    const Problem p = make_problem("griewangk", 3);
    PaoConfig cfg;
    cfg.specs.push_back({AttractorKind::StochasticGaussian, 0.3});
    cfg.hp.k = {1.0, 1.0, 0.5};
    const RunRecord a = run_pao(p, 25, 20, cfg, 7);
    const RunRecord b = run_pao(p, 25, 20, cfg, 7);
    const RunRecord c = run_pao(p, 25, 20, cfg, 8);
    ASSERT_EQ(a.history.size(), b.history.size());
    for (std::size_t g = 0; g < a.history.size(); ++g) {
        EXPECT_EQ(a.history[g].best, b.history[g].best);
        EXPECT_EQ(a.history[g].mean, b.history[g].mean);
        EXPECT_EQ(a.history[g].best_position, b.history[g].best_position);
    }
    EXPECT_NE(a.history.back().mean, c.history.back().mean);
}

TEST(RunPao, TranslationEquivariance) {
    const Problem base = make_problem("rosenbrock", 3);
    Eigen::VectorXd v(3);
    v << 2.0, -4.0, 0.5;
    const Problem moved = shifted(base, v);
    PaoConfig cfg;
    cfg.bounds_policy = BoundsPolicy::None;
    cfg.velocity_init = VelocityInit::UniformScaled;
    const RunRecord a = run_pao(base, 20, 15, cfg, 11);
    const RunRecord b = run_pao(moved, 20, 15, cfg, 11);
    for (std::size_t g = 0; g < a.history.size(); ++g) {
        const Eigen::VectorXd diff = b.history[g].best_position - a.history[g].best_position - v;
        EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-9) << "gen " << g;
        EXPECT_NEAR(b.history[g].best, a.history[g].best, 1e-9 * std::max(1.0, a.history[g].best));
    }
}

TEST(RunPao, DeJongConverges) {
    const Problem p = make_problem("dejong", 2);
    std::vector<double> finals;
    for (std::uint64_t seed = 0; seed < 20; ++seed) finals.push_back(run_pao(p, 100, 100, PaoConfig{}, seed).final_shifted_best());
    std::nth_element(finals.begin(), finals.begin() + 10, finals.end());
    EXPECT_LT(finals[10], 1e-3);
}

TEST(PaoConfig, Validation) {
    PaoConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.hp.k = {1.0};
    EXPECT_THROW(cfg.validate(), InvalidConfig);
    cfg = PaoConfig{};
    cfg.hp.zeta = -0.1;
    EXPECT_THROW(cfg.validate(), InvalidHyperparams);
    cfg = PaoConfig{};
    EXPECT_THROW(run_pao(make_problem("dejong", 2), 10, -1, cfg, 0), InvalidConfig);
    EXPECT_THROW(run_pao(make_problem("dejong", 2), 0, 1, cfg, 0), InvalidConfig);
    EXPECT_EQ(parse_velocity_init("uniform-scaled"), VelocityInit::UniformScaled);
    EXPECT_EQ(parse_bounds_policy("Reflect"), BoundsPolicy::Reflect);
    EXPECT_THROW(parse_bounds_policy("wrap"), InvalidConfig);
}
