#pragma once

// Experiment configuration. Precedence: CLI flag > GREEDYLAB_SEED env var >
// config file > built-in default. The echo() form is embedded in every
// report so a run can be reproduced from the report alone.

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace greedylab {

struct experiment_config {
    std::string mode = "exact"; // "exact" or "float"
    std::string space = "lp:1";
    std::string weights = "unit";
    int window = 12;
    std::size_t samples = 1000;
    unsigned long long seed = 7;
    std::vector<std::string> claims; // empty means "all applicable"
    int workers = 1;                 // accepted for config compatibility; execution is
                                     // sequential and results never depend on it
    std::string out;
    std::string preset;

    void validate() const {
        if (mode != "exact" && mode != "float")
            throw std::invalid_argument("config: mode must be 'exact' or 'float'");
        if (window < 1) throw std::invalid_argument("config: window must be >= 1");
        if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
        if (samples < 1) throw std::invalid_argument("config: samples must be >= 1");
    }

    nlohmann::ordered_json echo() const {
        nlohmann::ordered_json j;
        j["mode"] = mode;
        j["space"] = space;
        j["weights"] = weights;
        j["window"] = window;
        j["samples"] = samples;
        j["seed"] = std::to_string(seed);
        j["claims"] = claims;
        j["workers"] = workers;
        if (!preset.empty()) j["preset"] = preset;
        return j;
    }
};

inline std::optional<unsigned long long> env_seed() {
    const char* s = std::getenv("GREEDYLAB_SEED");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end) throw std::invalid_argument("GREEDYLAB_SEED must be a decimal integer");
    return v;
}

inline experiment_config config_from_json(const nlohmann::json& j) {
    experiment_config c;
    if (j.contains("mode")) c.mode = j.at("mode").get<std::string>();
    if (j.contains("space")) c.space = j.at("space").get<std::string>();
    if (j.contains("weights")) c.weights = j.at("weights").get<std::string>();
    if (j.contains("window")) c.window = j.at("window").get<int>();
    if (j.contains("samples")) c.samples = j.at("samples").get<std::size_t>();
    if (j.contains("seed")) {
        const auto& s = j.at("seed");
        if (s.is_string())
            c.seed = std::stoull(s.get<std::string>());
        else
            c.seed = s.get<unsigned long long>();
    }
    if (j.contains("claims")) c.claims = j.at("claims").get<std::vector<std::string>>();
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
    if (j.contains("out")) c.out = j.at("out").get<std::string>();
    if (j.contains("preset")) c.preset = j.at("preset").get<std::string>();
    c.validate();
    return c;
}

} // namespace greedylab
