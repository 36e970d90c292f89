#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <string>

#include "pao/baselines.hpp"
#include "pao/error.hpp"
#include "pao/random.hpp"

namespace pao::detail {

/// Linear schedule from start (generation 0) to end (last generation).
inline double linear_schedule(double start, double end, int g, int generations) {
    if (generations <= 1) return start;
    return start + (end - start) * static_cast<double>(g) / static_cast<double>(generations - 1);
}

/// K distinct indices in [0, n), all different from `exclude`.
template <std::size_t K>
std::array<Eigen::Index, K> pick_distinct(Eigen::Index n, Eigen::Index exclude, Rng& rng) {
    std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
    std::array<Eigen::Index, K> out{};
    for (std::size_t k = 0; k < K; ++k) {
        bool clash;
        do {
            out[k] = pick(rng);
            clash = out[k] == exclude;
            for (std::size_t prev = 0; prev < k && !clash; ++prev) clash = out[prev] == out[k];
        } while (clash);
    }
    return out;
}

inline void require_population(int n, int minimum, const char* algorithm) {
    if (n < minimum) {
        throw InsufficientPopulation(std::string(algorithm) + " needs a population of at least " +
                                     std::to_string(minimum));
    }
}

/// Uniform initial population with evaluated fitness and seeded bests.
inline Swarm random_population(const Problem& problem, int n, Rng& rng) {
    if (n < 1) throw InvalidConfig("population size must be >= 1");
    Swarm s;
    s.position.resize(n, problem.dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < problem.dim; ++j) s.position(i, j) = uniform(rng, problem.lower(j), problem.upper(j));
    s.velocity = Eigen::MatrixXd::Zero(n, problem.dim);
    evaluate_swarm(s, problem);
    s.reset_bests();
    return s;
}

class RunTimer {
public:
    RunTimer() : start_(std::chrono::steady_clock::now()) {}
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace pao::detail
