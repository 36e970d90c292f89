#pragma once

#include <cstdint>
#include <random>

namespace pao {

/// Random source used throughout. One engine per run; never shared across threads.
using Rng = std::mt19937_64;

/// Deterministically mixes a base seed with run coordinates (optimiser index,
/// problem index, repetition index) into a per-run seed.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t optimizer_index,
                          std::uint64_t problem_index, std::uint64_t repetition);

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double standard_normal(Rng& rng) {
    return std::normal_distribution<double>(0.0, 1.0)(rng);
}

}  // namespace pao
