#include "pao/lti_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "pao/error.hpp"
#include "pao/matrix_exponential.hpp"

namespace pao {

double Hyperparams::total_stiffness() const { return std::accumulate(k.begin(), k.end(), 0.0); }

void Hyperparams::validate() const {
    auto fail = [](const std::string& what) { throw InvalidHyperparams("invalid hyperparameters: " + what); };
    if (!(m > 0.0) || !std::isfinite(m)) fail("m must be > 0");
    if (!(dt > 0.0) || !std::isfinite(dt)) fail("dt must be > 0");
    if (!(zeta >= 0.0) || !std::isfinite(zeta)) fail("zeta must be >= 0");
    if (!(q0 >= 0.0) || !std::isfinite(q0)) fail("q0 must be >= 0");
    if (k.empty()) fail("at least one stiffness is required");
    for (double kr : k) {
        if (!(kr >= 0.0) || !std::isfinite(kr)) fail("stiffnesses must be >= 0");
    }
    if (!(total_stiffness() > 0.0)) fail("sum of stiffnesses must be > 0");
}

DriftMatrix build_drift_matrix(const Hyperparams& hp) {
    hp.validate();
    const double ratio = hp.total_stiffness() / hp.m;
    DriftMatrix drift;
    drift.f << 0.0, 1.0,
               -ratio, -2.0 * std::sqrt(ratio) * hp.zeta;
    return drift;
}

MfdResult matrix_fraction_decomposition(const DriftMatrix& drift, double q, double dt) {
    if (!(dt > 0.0)) throw InvalidHyperparams("matrix_fraction_decomposition: dt must be > 0");
    if (!(q >= 0.0)) throw InvalidHyperparams("matrix_fraction_decomposition: q must be >= 0");

    // The block identity is applied over a sub-interval h = dt / 2^s short
    // enough that exp(-Fᵀ h) is well conditioned; Σ(dt) is then rebuilt with
    // the exact doubling rule Σ(2h) = A(h) Σ(h) A(h)ᵀ + Σ(h).
    const double norm = drift.f.cwiseAbs().colwise().sum().maxCoeff() * dt;
    int halvings = 0;
    if (norm > 1.0) halvings = static_cast<int>(std::ceil(std::log2(norm)));
    const double h = std::ldexp(dt, -halvings);

    // Φ = [[F, L q Lᵀ], [0, -Fᵀ]] with L = (0, 1)ᵀ.
    Eigen::Matrix4d phi = Eigen::Matrix4d::Zero();
    phi.topLeftCorner<2, 2>() = drift.f;
    phi(1, 3) = q;
    phi.bottomRightCorner<2, 2>() = -drift.f.transpose();

    const Eigen::MatrixXd block = matrix_exponential(phi * h);
    const Eigen::Matrix2d upper_right = block.topRightCorner(2, 2);
    const Eigen::Matrix2d lower_right = block.bottomRightCorner(2, 2);

    // lower_right = exp(-Fᵀ h), whose determinant is exp(-trace(F) h) > 0.
    const double det = lower_right.determinant();
    const double scale = lower_right.cwiseAbs().maxCoeff();
    if (!std::isfinite(det) || std::abs(det) <= 1e-14 * scale * scale) {
        throw NumericalFailure("matrix_fraction_decomposition: singular lower-right block");
    }

    Eigen::Matrix2d a = block.topLeftCorner(2, 2);
    Eigen::Matrix2d sigma = upper_right * lower_right.inverse();
    sigma = (0.5 * (sigma + sigma.transpose())).eval();
    for (int i = 0; i < halvings; ++i) {
        sigma = a * sigma * a.transpose() + sigma;
        sigma = (0.5 * (sigma + sigma.transpose())).eval();
        a = a * a;
    }

    MfdResult out;
    out.a = halvings == 0 ? a : Eigen::Matrix2d(matrix_exponential(drift.f * dt));
    out.sigma = sigma;
    return out;
}

Eigen::Matrix2d cholesky_2x2(const Eigen::Matrix2d& s) {
    Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
    if (s(0, 0) > 0.0) {
        h(0, 0) = std::sqrt(s(0, 0));
        h(1, 0) = s(1, 0) / h(0, 0);
    }
    const double pivot = s(1, 1) - h(1, 0) * h(1, 0);
    h(1, 1) = pivot > 0.0 ? std::sqrt(pivot) : 0.0;
    return h;
}

TransitionKernel build_kernel(const Hyperparams& hp) {
    const DriftMatrix drift = build_drift_matrix(hp);
    const MfdResult mfd = matrix_fraction_decomposition(drift, 1.0, hp.dt);
    return TransitionKernel{mfd.a, mfd.sigma, cholesky_2x2(mfd.sigma)};
}

Eigen::Vector2d sample_transition(const TransitionKernel& kernel, const Eigen::Vector2d& x,
                                  double noise_variance, Rng& rng) {
    if (!(noise_variance > 0.0)) return kernel.a * x;
    Eigen::Vector2d d;
    d(0) = standard_normal(rng);
    d(1) = standard_normal(rng);
    return propagate(kernel, x, std::sqrt(noise_variance), d);
}

double transition_logpdf(const TransitionKernel& kernel, const Eigen::Vector2d& x_from,
                         const Eigen::Vector2d& x_to, double noise_variance) {
    const Eigen::Matrix2d cov = noise_variance * kernel.sigma_unit;
    const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
    if (!(noise_variance > 0.0) || !(det > 0.0) ||
        det <= 1e-14 * std::abs(cov(0, 0) * cov(1, 1))) {
        throw DegenerateCovariance("transition_logpdf: covariance is singular");
    }
    const Eigen::Vector2d r = x_to - kernel.a * x_from;
    const double mahalanobis =
        (cov(1, 1) * r(0) * r(0) - 2.0 * cov(0, 1) * r(0) * r(1) + cov(0, 0) * r(1) * r(1)) / det;
    return -std::log(2.0 * std::numbers::pi) - 0.5 * std::log(det) - 0.5 * mahalanobis;
}

Eigen::Vector2d eigenvalue_moduli(const Eigen::Matrix2d& a) {
    Eigen::EigenSolver<Eigen::Matrix2d> solver(a, false);
    Eigen::Vector2d moduli = solver.eigenvalues().cwiseAbs();
    if (moduli(0) < moduli(1)) std::swap(moduli(0), moduli(1));
    return moduli;
}

}  // namespace pao
