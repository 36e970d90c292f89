#pragma once

#include <vector>

#include <Eigen/Dense>

#include "pao/random.hpp"

namespace pao {

/// Physical parameters of the per-element second-order oscillator.
struct Hyperparams {
    double m = 1.0;              ///< inertia coefficient
    double zeta = 0.2;           ///< damping ratio
    std::vector<double> k{1.0, 1.0};  ///< one stiffness per attractor
    double q0 = 1.0;             ///< stochastic scale
    double dt = 1.0;             ///< integration interval

    /// Sum of the stiffnesses (k').
    double total_stiffness() const;

    /// Throws InvalidHyperparams when any invariant is violated.
    void validate() const;
};

/// Drift matrix F of the state-space form d[x', z] = F [x', z] dt + L dβ, L = (0, 1)ᵀ.
struct DriftMatrix {
    Eigen::Matrix2d f;
};

/// Exact one-step discretisation for unit diffusion. Immutable once built.
struct TransitionKernel {
    Eigen::Matrix2d a;           ///< state transition exp(F dt)
    Eigen::Matrix2d sigma_unit;  ///< process noise covariance for Q = 1
    Eigen::Matrix2d h;           ///< lower Cholesky factor of sigma_unit
};

struct MfdResult {
    Eigen::Matrix2d a;
    Eigen::Matrix2d sigma;
};

DriftMatrix build_drift_matrix(const Hyperparams& hp);

/// Jointly computes A = exp(F dt) and the process noise covariance for
/// diffusion spectral density q from one 4x4 matrix exponential.
MfdResult matrix_fraction_decomposition(const DriftMatrix& drift, double q, double dt);

TransitionKernel build_kernel(const Hyperparams& hp);

/// Lower-triangular factor with h hᵀ = s. Non-positive pivots are zeroed,
/// producing a rank-deficient factor for singular s.
Eigen::Matrix2d cholesky_2x2(const Eigen::Matrix2d& s);

/// a x + scale * h d for a given standard-normal pair d.
inline Eigen::Vector2d propagate(const TransitionKernel& kernel, const Eigen::Vector2d& x,
                                 double noise_scale, const Eigen::Vector2d& d) {
    return kernel.a * x + noise_scale * (kernel.h * d);
}

/// Draws the next state given noise variance q0·ν. A zero variance applies
/// the deterministic map without consuming random numbers.
Eigen::Vector2d sample_transition(const TransitionKernel& kernel, const Eigen::Vector2d& x,
                                  double noise_variance, Rng& rng);

/// Log density of N(a x_from, noise_variance · sigma_unit) at x_to.
double transition_logpdf(const TransitionKernel& kernel, const Eigen::Vector2d& x_from,
                         const Eigen::Vector2d& x_to, double noise_variance);

/// Moduli of the eigenvalues of A, largest first.
Eigen::Vector2d eigenvalue_moduli(const Eigen::Matrix2d& a);

}  // namespace pao
