#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pao/attractors.hpp"
#include "pao/benchmarks.hpp"
#include "pao/lti_kernel.hpp"
#include "pao/random.hpp"
#include "pao/run_record.hpp"
#include "pao/swarm.hpp"

namespace pao {

enum class VelocityInit { Zero, UniformScaled };

VelocityInit parse_velocity_init(std::string_view s);
std::string_view to_string(VelocityInit v);

/// Particle attractor optimiser settings. Defaults: m = 1, ζ = 0.2, k = [1, 1],
/// q0 = 1, Δt = 1 with local-best and global-best attractors.
struct PaoConfig {
    Hyperparams hp;
    std::vector<AttractorSpec> specs{AttractorSpec::local_best(), AttractorSpec::global_best()};
    BoundsPolicy bounds_policy = BoundsPolicy::Clip;
    VelocityInit velocity_init = VelocityInit::Zero;

    void validate() const;
};

/// Standard-normal draws for one generation, indexed [particle, dimension];
/// `position` drives the first state component, `velocity` the second.
struct NormalTensor {
    Eigen::MatrixXd position;
    Eigen::MatrixXd velocity;
};

/// Draws N x D x 2 normals in particle-major, dimension, component order.
NormalTensor draw_normals(Eigen::Index n, Eigen::Index d, Rng& rng);

Swarm initialize_swarm(const Problem& problem, int n, const PaoConfig& cfg, Rng& rng);

/// Moves every element of every particle one exact step in coordinates
/// relative to `centroid`, then applies bounds, re-evaluates and updates bests.
/// `draws` may be null only when noise_variance is zero.
void advance_swarm(Swarm& swarm, const TransitionKernel& kernel, const Eigen::MatrixXd& centroid,
                   double noise_variance, const NormalTensor* draws, const PaoConfig& cfg,
                   const Problem& problem);

/// One generation: attractors, noise scale, exact stochastic update.
Swarm step_swarm(const Swarm& swarm, const TransitionKernel& kernel, const PaoConfig& cfg,
                 const Problem& problem, Rng& rng);

RunRecord run_pao(const Problem& problem, int n, int generations, const PaoConfig& cfg,
                  std::uint64_t seed);

}  // namespace pao
