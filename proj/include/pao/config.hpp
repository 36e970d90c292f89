#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pao/benchmarks.hpp"
#include "pao/optimizer.hpp"

namespace pao {

/// Flat key/value experiment description. Every key mirrors a CLI flag or a
/// PAO setting; fields left unset fall back to the defaults.
struct ExperimentConfig {
    std::optional<std::string> optimizer;
    std::optional<std::string> problem;
    std::optional<int> dim;
    std::optional<int> pop;
    std::optional<int> gens;
    std::optional<int> reps;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<std::string> suite;

    // PAO
    std::optional<double> m;
    std::optional<double> zeta;
    std::optional<std::vector<double>> k;
    std::optional<double> q0;
    std::optional<double> dt;
    std::optional<std::vector<std::string>> attractors;
    std::optional<std::string> bounds_policy;
    std::optional<std::string> velocity_init;

    std::optional<double> griewangk_denominator;

    /// Strict parse: unknown keys and wrongly typed values raise InvalidConfig.
    static ExperimentConfig from_json(const nlohmann::json& j);
    static ExperimentConfig load(const std::filesystem::path& path);

    /// Overlays every field set in `other` onto this config.
    void merge(const ExperimentConfig& other);

    OptimizerConfig optimizer_config() const;
    ProblemOptions problem_options() const;
};

/// Parses "1,2.5,3" into numbers; throws InvalidConfig.
std::vector<double> parse_number_list(const std::string& s);
std::vector<std::string> split_list(const std::string& s);

}  // namespace pao
