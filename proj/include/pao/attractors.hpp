#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pao/random.hpp"
#include "pao/swarm.hpp"

namespace pao {

enum class AttractorKind {
    GlobalBest,
    LocalBest,
    AverageLocalBest,
    AverageParticle,
    WeightedAverageParticle,
    DERand1Bin,
    StochasticGaussian,
};

struct AttractorSpec {
    AttractorKind kind = AttractorKind::GlobalBest;
    double stddev = 0.0;  ///< StochasticGaussian only

    static AttractorSpec global_best() { return {AttractorKind::GlobalBest, 0.0}; }
    static AttractorSpec local_best() { return {AttractorKind::LocalBest, 0.0}; }
};

/// Differential weight of the rand/1 donor attractor.
inline constexpr double kDonorWeight = 0.5;

/// Parses "globalbest", "localbest", ..., "stochasticgaussian" (case-insensitive).
/// The Gaussian stddev may be appended as "stochasticgaussian:0.1".
AttractorSpec parse_attractor_spec(std::string_view s);
std::string to_string(const AttractorSpec& spec);

/// alpha[r] is the N x D slice of attraction points for attractor r.
struct AttractorSet {
    std::vector<Eigen::MatrixXd> alpha;
    std::vector<double> k;
};

/// Attraction points for every particle. The swarm must hold evaluated fitness
/// and current best archives. DERand1Bin needs at least four particles.
AttractorSet compute_attractors(const Swarm& swarm, const std::vector<AttractorSpec>& specs,
                                const std::vector<double>& k, Rng& rng);

/// (1/k') Σ_r k_r α_r for every particle and dimension.
Eigen::MatrixXd weighted_centroid(const AttractorSet& aset);

/// Squared distance between the mean particle position and the global best.
double noise_scale(const Swarm& swarm);

}  // namespace pao
