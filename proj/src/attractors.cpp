#include "pao/attractors.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pao/error.hpp"

namespace pao {
namespace {

struct KindName {
    AttractorKind kind;
    std::string_view name;
};

constexpr std::array<KindName, 7> kKindNames{{
    {AttractorKind::GlobalBest, "globalbest"},
    {AttractorKind::LocalBest, "localbest"},
    {AttractorKind::AverageLocalBest, "averagelocalbest"},
    {AttractorKind::AverageParticle, "averageparticle"},
    {AttractorKind::WeightedAverageParticle, "weightedaverageparticle"},
    {AttractorKind::DERand1Bin, "derand1bin"},
    {AttractorKind::StochasticGaussian, "stochasticgaussian"},
}};

Eigen::MatrixXd broadcast(const Eigen::RowVectorXd& row, Eigen::Index n) {
    return row.replicate(n, 1);
}

Eigen::RowVectorXd fitness_weighted_mean(const Swarm& swarm) {
    constexpr double eps = 1e-12;
    const double fmin = swarm.fitness.minCoeff();
    const double fmax = swarm.fitness.maxCoeff();
    const Eigen::VectorXd w =
        (-(swarm.fitness.array() - fmin) / (fmax - fmin + eps)).exp().matrix();
    return (w.transpose() * swarm.position) / w.sum();
}

Eigen::MatrixXd donor_vectors(const Swarm& swarm, Rng& rng) {
    const Eigen::Index n = swarm.size();
    if (n < 4) {
        throw InsufficientPopulation("rand/1 donor attractor needs at least 4 particles");
    }
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    Eigen::MatrixXd out(n, swarm.dim());
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::Index a, b, c;
        do { a = pick(rng); } while (a == i);
        do { b = pick(rng); } while (b == i || b == a);
        do { c = pick(rng); } while (c == i || c == a || c == b);
        out.row(i) = swarm.position.row(a) + kDonorWeight * (swarm.position.row(b) - swarm.position.row(c));
    }
    return out;
}

}  // namespace

AttractorSpec parse_attractor_spec(std::string_view s) {
    std::string key = to_lower(s);
    double stddev = 0.0;
    if (const auto colon = key.find(':'); colon != std::string::npos) {
        try {
            stddev = std::stod(key.substr(colon + 1));
        } catch (const std::exception&) {
            throw InvalidConfig("bad attractor parameter in: " + std::string(s));
        }
        key.resize(colon);
    }
    for (const auto& [kind, name] : kKindNames) {
        if (key == name) {
            if (kind == AttractorKind::StochasticGaussian && !(stddev >= 0.0)) {
                throw InvalidConfig("stochastic attractor stddev must be >= 0");
            }
            return {kind, stddev};
        }
    }
    throw InvalidConfig("unknown attractor kind: " + std::string(s));
}

std::string to_string(const AttractorSpec& spec) {
    for (const auto& [kind, name] : kKindNames) {
        if (kind != spec.kind) continue;
        if (kind != AttractorKind::StochasticGaussian) return std::string(name);
        std::ostringstream out;
        out << name << ':' << spec.stddev;
        return out.str();
    }
    return "unknown";
}

AttractorSet compute_attractors(const Swarm& swarm, const std::vector<AttractorSpec>& specs,
                                const std::vector<double>& k, Rng& rng) {
    if (specs.size() != k.size()) {
        throw InvalidConfig("number of attractors and stiffnesses differ");
    }
    const Eigen::Index n = swarm.size();
    AttractorSet aset;
    aset.k = k;
    aset.alpha.reserve(specs.size());
    for (const auto& spec : specs) {
        switch (spec.kind) {
            case AttractorKind::GlobalBest:
                aset.alpha.push_back(broadcast(swarm.global_best_pos.transpose(), n));
                break;
            case AttractorKind::LocalBest:
                aset.alpha.push_back(swarm.local_best_pos);
                break;
            case AttractorKind::AverageLocalBest:
                aset.alpha.push_back(broadcast(swarm.local_best_pos.colwise().mean(), n));
                break;
            case AttractorKind::AverageParticle:
                aset.alpha.push_back(broadcast(swarm.position.colwise().mean(), n));
                break;
            case AttractorKind::WeightedAverageParticle:
                aset.alpha.push_back(broadcast(fitness_weighted_mean(swarm), n));
                break;
            case AttractorKind::DERand1Bin:
                aset.alpha.push_back(donor_vectors(swarm, rng));
                break;
            case AttractorKind::StochasticGaussian: {
                Eigen::MatrixXd slice = broadcast(swarm.global_best_pos.transpose(), n);
                std::normal_distribution<double> noise(0.0, spec.stddev);
                if (spec.stddev > 0.0) {
                    for (Eigen::Index i = 0; i < n; ++i)
                        for (Eigen::Index j = 0; j < slice.cols(); ++j) slice(i, j) += noise(rng);
                }
                aset.alpha.push_back(std::move(slice));
                break;
            }
        }
    }
    return aset;
}

Eigen::MatrixXd weighted_centroid(const AttractorSet& aset) {
    const double total = std::accumulate(aset.k.begin(), aset.k.end(), 0.0);
    if (!(total > 0.0) || aset.alpha.empty()) {
        throw InvalidHyperparams("weighted_centroid: sum of stiffnesses must be > 0");
    }
    Eigen::MatrixXd centroid = Eigen::MatrixXd::Zero(aset.alpha.front().rows(), aset.alpha.front().cols());
    for (std::size_t r = 0; r < aset.alpha.size(); ++r) centroid += aset.k[r] * aset.alpha[r];
    return centroid / total;
}

double noise_scale(const Swarm& swarm) {
    const Eigen::RowVectorXd mean = swarm.position.colwise().mean();
    return (mean - swarm.global_best_pos.transpose()).squaredNorm();
}

}  // namespace pao
