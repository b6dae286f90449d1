// polyalg: power-sum polynomial calculus between complex normed spaces and
// finite commutative Banach algebras. Subcommands mirror the library
// operations; all stochastic commands are seeded and byte-reproducible.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "polyalg/json_io.hpp"
#include "polyalg/run.hpp"

namespace {

using polyalg::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw polyalg::ConfigError("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

struct CommonOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Run configuration JSON file");
    cmd->add_option("--seed", opts.seed, "Seed for stochastic commands (overrides config)");
    cmd->add_option("--out", opts.out_path, "Write output JSON to this path instead of stdout");
}

int execute(const json& config, const CommonOptions& opts) {
    json final_config = config;
    if (opts.seed) final_config["seed"] = *opts.seed;
    const polyalg::RunResult result = polyalg::run_config(final_config);
    if (!result.error.empty()) std::cerr << "polyalg: " << result.error << "\n";
    if (result.exit_code == 0 || result.exit_code == 3) {
        const std::string text = polyalg::canonical_dump(result.output, 2);
        if (opts.out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(opts.out_path);
            if (!out) {
                std::cerr << "polyalg: cannot write " << opts.out_path << "\n";
                return 2;
            }
            out << text;
        }
    }
    return result.exit_code;
}

json base_config(const CommonOptions& opts, const std::string& command) {
    json config = opts.config_path.empty() ? json::object() : load_json_file(opts.config_path);
    config["command"] = command;
    return config;
}

/// Self-contained object document -> named workspace entry.
void attach_object(json& config, const std::string& name, const std::string& path) {
    if (path.empty()) return;
    if (!config.contains("objects")) config["objects"] = json::object();
    config["objects"][name] = load_json_file(path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"power-sum polynomial calculus on finite Banach algebras"};
    app.require_subcommand(1);

    CommonOptions opts;
    json cli_params = json::object();

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a polynomial at a point");
    add_common(eval_cmd, opts);
    std::string eval_object, eval_point, object_path;
    eval_cmd->add_option("--object", eval_object, "Object name (config) or JSON file path");
    eval_cmd->add_option("--point", eval_point, "Point as inline JSON, e.g. [[3.0,0.0]]");

    // polarize
    auto* polarize_cmd = app.add_subcommand("polarize", "Symmetric form of a homogeneous polynomial");
    add_common(polarize_cmd, opts);
    std::string polarize_object;
    polarize_cmd->add_option("--object", polarize_object, "Object name or JSON file path");

    // product
    auto* product_cmd = app.add_subcommand("product", "Product of two power sums");
    add_common(product_cmd, opts);
    std::string left_name, right_name;
    product_cmd->add_option("--left", left_name, "Left factor (object name or file)");
    product_cmd->add_option("--right", right_name, "Right factor (object name or file)");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "Norm estimation");
    add_common(norm_cmd, opts);
    std::string norm_object, norm_kind, norm_k;
    std::optional<long> samples;
    std::optional<int> refine;
    norm_cmd->add_option("--object", norm_object, "Object name or JSON file path");
    norm_cmd->add_option("--kind", norm_kind,
                         "unit-ball | uniform-K | nuclear-upper | operator | tensor-eps");
    norm_cmd->add_option("--K", norm_k, "Point set (object name or file), for uniform-K/tensor-eps");
    norm_cmd->add_option("--samples", samples, "Sample count");
    norm_cmd->add_option("--refine", refine, "Refinement steps");

    // hull
    auto* hull_cmd = app.add_subcommand("hull", "Nuclear polynomial hull membership test");
    add_common(hull_cmd, opts);
    std::string hull_candidate, hull_k;
    int degree_cap = 4, terms_cap = 4;
    std::optional<long> hull_samples;
    hull_cmd->add_option("--candidate", hull_candidate, "Candidate point as inline JSON");
    hull_cmd->add_option("--K", hull_k, "Point set (object name or file)");
    hull_cmd->add_option("--degree-cap", degree_cap, "Max witness degree");
    hull_cmd->add_option("--terms-cap", terms_cap, "Max functionals per degree");
    hull_cmd->add_option("--samples", hull_samples, "Random restarts per degree");

    // tensorize
    auto* tensorize_cmd = app.add_subcommand("tensorize", "Rewrite as scalar (x) algebra pairs");
    add_common(tensorize_cmd, opts);
    std::string tensorize_object, tensorize_k;
    std::optional<int> rank_cap;
    tensorize_cmd->add_option("--object", tensorize_object, "Polynomial (object name or file)");
    tensorize_cmd->add_option("--K", tensorize_k, "Point set (object name or file)");
    tensorize_cmd->add_option("--rank-cap", rank_cap, "Identity approximation rank cap");

    // character
    auto* character_cmd = app.add_subcommand("character", "Build and validate an evaluation character");
    add_common(character_cmd, opts);
    std::string char_candidate, char_k, char_phi, generators_path;
    character_cmd->add_option("--candidate", char_candidate, "Hull point as inline JSON");
    character_cmd->add_option("--K", char_k, "Point set (object name or file)");
    character_cmd->add_option("--phi", char_phi, "Algebra character as inline JSON (optional)");
    character_cmd->add_option("--generators", generators_path,
                              "JSON file: {\"generators\": [names...]} into the config objects");

    // verify-suite
    auto* verify_cmd = app.add_subcommand("verify-suite", "Run one property suite");
    add_common(verify_cmd, opts);
    std::string suite_name;
    std::optional<long> suite_instances;
    verify_cmd->add_option("suite", suite_name, "Suite name");
    verify_cmd->add_option("--instances", suite_instances, "Instance count (0 = suite default)");

    // report
    auto* report_cmd = app.add_subcommand("report", "Run every suite and aggregate");
    add_common(report_cmd, opts);
    std::optional<long> report_instances;
    report_cmd->add_option("--instances", report_instances, "Instance count override");

    CLI11_PARSE(app, argc, argv);

    try {
        auto object_ref = [](json& config, const std::string& key, const std::string& value,
                             const char* kind) {
            if (value.empty()) return;
            if (value.find(".json") != std::string::npos) {
                const std::string name = std::string("__") + key;
                attach_object(config, name, value);
                config["params"][key] = name;
            } else {
                config["params"][key] = value;
            }
            (void)kind;
        };

        if (*eval_cmd) {
            json config = base_config(opts, "eval");
            object_ref(config, "object", eval_object, "polynomial");
            if (!eval_point.empty()) config["params"]["point"] = json::parse(eval_point);
            return execute(config, opts);
        }
        if (*polarize_cmd) {
            json config = base_config(opts, "polarize");
            object_ref(config, "object", polarize_object, "polynomial");
            return execute(config, opts);
        }
        if (*product_cmd) {
            json config = base_config(opts, "product");
            object_ref(config, "left", left_name, "polynomial");
            object_ref(config, "right", right_name, "polynomial");
            return execute(config, opts);
        }
        if (*norm_cmd) {
            json config = base_config(opts, "norm");
            object_ref(config, "object", norm_object, "object");
            object_ref(config, "K", norm_k, "points");
            config["params"]["kind"] = norm_kind;
            if (samples) config["params"]["samples"] = *samples;
            if (refine) config["params"]["refine"] = *refine;
            return execute(config, opts);
        }
        if (*hull_cmd) {
            json config = base_config(opts, "hull");
            object_ref(config, "K", hull_k, "points");
            if (!hull_candidate.empty()) config["params"]["candidate"] = json::parse(hull_candidate);
            config["params"]["degree_cap"] = degree_cap;
            config["params"]["terms_cap"] = terms_cap;
            if (hull_samples) config["params"]["samples"] = *hull_samples;
            return execute(config, opts);
        }
        if (*tensorize_cmd) {
            json config = base_config(opts, "tensorize");
            object_ref(config, "object", tensorize_object, "polynomial");
            object_ref(config, "K", tensorize_k, "points");
            if (rank_cap) config["params"]["rank_cap"] = *rank_cap;
            return execute(config, opts);
        }
        if (*character_cmd) {
            json config = base_config(opts, "character");
            object_ref(config, "K", char_k, "points");
            if (!char_candidate.empty()) config["params"]["candidate"] = json::parse(char_candidate);
            if (!char_phi.empty()) config["params"]["phi"] = json::parse(char_phi);
            if (!generators_path.empty()) {
                const json doc = load_json_file(generators_path);
                if (doc.contains("objects"))
                    for (const auto& [name, obj] : doc.at("objects").items())
                        config["objects"][name] = obj;
                config["params"]["generators"] = doc.at("generators");
            }
            return execute(config, opts);
        }
        if (*verify_cmd) {
            json config = base_config(opts, "verify-suite");
            config["params"]["suite"] = suite_name;
            if (suite_instances) config["params"]["instances"] = *suite_instances;
            return execute(config, opts);
        }
        if (*report_cmd) {
            json config = base_config(opts, "report");
            if (report_instances) config["params"]["instances"] = *report_instances;
            return execute(config, opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "polyalg: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
