#include "pao/config.hpp"

#include <fstream>
#include <sstream>

#include "pao/error.hpp"

namespace pao {
namespace {

using nlohmann::json;

template <typename T>
void read(const json& j, const char* key, std::optional<T>& field) {
    try {
        field = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InvalidConfig(std::string("config key '") + key + "': " + e.what());
    }
}

// Accepts either a JSON array or a comma-separated string.
void read_numbers(const json& j, const char* key, std::optional<std::vector<double>>& field) {
    const json& v = j.at(key);
    if (v.is_string()) {
        field = parse_number_list(v.get<std::string>());
    } else if (v.is_number()) {
        field = std::vector<double>{v.get<double>()};
    } else {
        read(j, key, field);
    }
}

void read_strings(const json& j, const char* key, std::optional<std::vector<std::string>>& field) {
    const json& v = j.at(key);
    if (v.is_string()) {
        field = split_list(v.get<std::string>());
    } else {
        read(j, key, field);
    }
}

template <typename T>
void overlay(std::optional<T>& dst, const std::optional<T>& src) {
    if (src) dst = src;
}

}  // namespace

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) continue;
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& s) {
    std::vector<double> out;
    for (const auto& item : split_list(s)) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size()) throw InvalidConfig("not a number: '" + item + "'");
        out.push_back(value);
    }
    if (out.empty()) throw InvalidConfig("empty number list");
    return out;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
    if (!j.is_object()) throw InvalidConfig("config must be a JSON object");
    ExperimentConfig c;
    for (const auto& [key, value] : j.items()) {
        const char* k = key.c_str();
        if (key == "optimizer") read(j, k, c.optimizer);
        else if (key == "problem") read(j, k, c.problem);
        else if (key == "dim") read(j, k, c.dim);
        else if (key == "pop") read(j, k, c.pop);
        else if (key == "gens") read(j, k, c.gens);
        else if (key == "reps") read(j, k, c.reps);
        else if (key == "seed") read(j, k, c.seed);
        else if (key == "out") read(j, k, c.out);
        else if (key == "suite") read(j, k, c.suite);
        else if (key == "m") read(j, k, c.m);
        else if (key == "zeta") read(j, k, c.zeta);
        else if (key == "k") read_numbers(j, k, c.k);
        else if (key == "q0") read(j, k, c.q0);
        else if (key == "dt") read(j, k, c.dt);
        else if (key == "attractors") read_strings(j, k, c.attractors);
        else if (key == "bounds_policy") read(j, k, c.bounds_policy);
        else if (key == "velocity_init") read(j, k, c.velocity_init);
        else if (key == "griewangk_denominator") read(j, k, c.griewangk_denominator);
        else throw InvalidConfig("unknown config key: " + key);
    }
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open config file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidConfig("config file " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

void ExperimentConfig::merge(const ExperimentConfig& o) {
    overlay(optimizer, o.optimizer);
    overlay(problem, o.problem);
    overlay(dim, o.dim);
    overlay(pop, o.pop);
    overlay(gens, o.gens);
    overlay(reps, o.reps);
    overlay(seed, o.seed);
    overlay(out, o.out);
    overlay(suite, o.suite);
    overlay(m, o.m);
    overlay(zeta, o.zeta);
    overlay(k, o.k);
    overlay(q0, o.q0);
    overlay(dt, o.dt);
    overlay(attractors, o.attractors);
    overlay(bounds_policy, o.bounds_policy);
    overlay(velocity_init, o.velocity_init);
    overlay(griewangk_denominator, o.griewangk_denominator);
}

OptimizerConfig ExperimentConfig::optimizer_config() const {
    OptimizerConfig cfg;
    PaoConfig& p = cfg.pao;
    if (m) p.hp.m = *m;
    if (zeta) p.hp.zeta = *zeta;
    if (q0) p.hp.q0 = *q0;
    if (dt) p.hp.dt = *dt;
    if (attractors) {
        p.specs.clear();
        for (const auto& a : *attractors) p.specs.push_back(parse_attractor_spec(a));
    }
    if (k) {
        p.hp.k = *k;
    } else if (attractors) {
        p.hp.k.assign(p.specs.size(), 1.0);
    }
    if (bounds_policy) {
        p.bounds_policy = parse_bounds_policy(*bounds_policy);
        cfg.baselines.bounds_policy = p.bounds_policy;
    }
    if (velocity_init) p.velocity_init = parse_velocity_init(*velocity_init);
    p.validate();
    cfg.baselines.validate();
    return cfg;
}

ProblemOptions ExperimentConfig::problem_options() const {
    ProblemOptions opts;
    if (griewangk_denominator) opts.griewangk_denominator = *griewangk_denominator;
    return opts;
}

}  // namespace pao
