#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "csucb/errors.hpp"
#include "csucb/harness.hpp"

namespace csucb {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ValidationError("config: missing or non-numeric field '" + key + "'");
    }
    return j[key].get<double>();
}

std::vector<double> require_vector(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ValidationError("config: missing or non-array field '" + key + "'");
    }
    std::vector<double> out;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ValidationError("config: '" + key + "' has a non-numeric entry");
        out.push_back(v.get<double>());
    }
    return out;
}

RewardSpec parse_reward(const json& j) {
    if (!j.contains("reward") || !j["reward"].is_object()) {
        throw ValidationError("config: missing 'reward' object");
    }
    const json& r = j["reward"];
    const std::string type = r.value("type", "");
    if (type == "topk") {
        TopKParams params;
        params.K = static_cast<int>(require_number(r, "K"));
        return params;
    }
    if (type == "util") {
        UtilParams params;
        params.a = require_vector(r, "a");
        params.b = require_vector(r, "b");
        return params;
    }
    throw ValidationError("config: reward.type must be 'topk' or 'util'");
}

}  // namespace

ExperimentSpec load_experiment_spec(const std::string& path, const ConfigOverrides& overrides) {
    std::ifstream in(path);
    if (!in.is_open()) throw IoError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("config: " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw ValidationError("config: top level must be a JSON object");

    ExperimentSpec spec;
    InstanceConfig& instance = spec.instance;

    const std::string experiment = j.value("experiment", "custom");
    if (experiment == "exp_one") {
        spec.tag = ExperimentTag::ExpOne;
    } else if (experiment == "exp_two") {
        spec.tag = ExperimentTag::ExpTwo;
    } else if (experiment == "custom") {
        spec.tag = ExperimentTag::Custom;
    } else {
        throw ValidationError("config: experiment must be exp_one, exp_two, or custom");
    }

    instance.reward = parse_reward(j);
    instance.horizon = static_cast<std::int64_t>(require_number(j, "horizon"));
    instance.gamma = j.value("gamma", 1.0);
    instance.beta = j.value("beta", 1.0);
    instance.runs = static_cast<int>(j.value("runs", 1.0));
    if (j.contains("master_seed")) {
        if (!j["master_seed"].is_number_unsigned() && !j["master_seed"].is_number_integer()) {
            throw ValidationError("config: master_seed must be an integer");
        }
        instance.master_seed = j["master_seed"].get<std::uint64_t>();
    }
    instance.resample_instance = j.value("resample_instance", false);
    spec.jobs = static_cast<int>(j.value("jobs", 1.0));
    spec.output_stem = j.value("output_stem", std::string("experiment"));

    // CLI overrides that shape instance generation must land before any
    // sampling happens.
    if (overrides.master_seed) instance.master_seed = *overrides.master_seed;
    if (overrides.horizon) instance.horizon = *overrides.horizon;
    if (overrides.runs) instance.runs = *overrides.runs;
    if (overrides.jobs) spec.jobs = *overrides.jobs;
    if (overrides.gamma) instance.gamma = *overrides.gamma;
    if (overrides.beta) instance.beta = *overrides.beta;
    if (overrides.resample_instance) instance.resample_instance = *overrides.resample_instance;
    if (overrides.output_dir) spec.output_dir = *overrides.output_dir;

    if (spec.tag == ExperimentTag::Custom) {
        instance.mu = require_vector(j, "mu");
        instance.k = static_cast<int>(instance.mu.size());
        if (j.contains("k") &&
            static_cast<int>(require_number(j, "k")) != instance.k) {
            throw ValidationError("config: k does not match the length of mu");
        }
        if (j.contains("avail_p")) instance.avail_p = require_vector(j, "avail_p");
    } else {
        instance.k = static_cast<int>(require_number(j, "k"));
        RandomStream stream = instance_stream(instance.master_seed);
        if (spec.tag == ExperimentTag::ExpOne) {
            InstanceConfig sampled = sample_exp_one(instance.k, stream);
            instance.mu = std::move(sampled.mu);
            instance.avail_p = std::move(sampled.avail_p);
        } else {
            ExpTwoTargets targets;
            targets.delta_min = require_number(j, "delta_min_target");
            if (j.contains("sigma_target")) targets.sigma = require_number(j, "sigma_target");
            spec.exp_two_targets = targets;
            InstanceConfig sampled = sample_exp_two(instance.k, instance.reward,
                                                    targets.delta_min, targets.sigma, stream,
                                                    instance.gamma);
            instance.mu = std::move(sampled.mu);
            instance.avail_p = std::move(sampled.avail_p);
        }
    }

    std::string script_path = j.value("availability_script", std::string());
    if (overrides.availability_script) script_path = *overrides.availability_script;
    if (!script_path.empty()) {
        instance.availability_script = load_availability_script(script_path, instance.k);
        instance.avail_p.clear();
    }

    instance.validate();
    return spec;
}

namespace {

void digest_mix(std::uint64_t& h, const std::string& bytes) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;  // FNV-1a
    }
    h ^= '|';
    h *= 0x100000001B3ULL;
}

void digest_mix(std::uint64_t& h, double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    digest_mix(h, std::string(buffer));
}

}  // namespace

std::string experiment_digest(const ExperimentSpec& spec) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    const InstanceConfig& instance = spec.instance;
    digest_mix(h, std::to_string(instance.k));
    for (double m : instance.mu) digest_mix(h, m);
    for (double p : instance.avail_p) digest_mix(h, p);
    if (std::holds_alternative<UtilParams>(instance.reward)) {
        const auto& u = std::get<UtilParams>(instance.reward);
        digest_mix(h, std::string("util"));
        for (double a : u.a) digest_mix(h, a);
        for (double b : u.b) digest_mix(h, b);
    } else {
        digest_mix(h, std::string("topk"));
        digest_mix(h, static_cast<double>(std::get<TopKParams>(instance.reward).K));
    }
    digest_mix(h, static_cast<double>(instance.horizon));
    digest_mix(h, instance.gamma);
    digest_mix(h, instance.beta);
    digest_mix(h, static_cast<double>(instance.runs));
    digest_mix(h, std::to_string(instance.master_seed));
    digest_mix(h, std::string(instance.resample_instance ? "resample" : "fixed"));
    if (instance.availability_script) {
        digest_mix(h, static_cast<double>(instance.availability_script->rounds.size()));
        for (const auto& round : instance.availability_script->rounds) {
            for (int i : round) digest_mix(h, static_cast<double>(i));
        }
    }
    char buffer[20];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(h));
    return buffer;
}

}  // namespace csucb
