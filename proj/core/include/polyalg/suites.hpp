#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polyalg/algebra.hpp"

namespace polyalg {

struct PropertyResult {
    std::string name;
    long instances = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long instances = 0;
    std::vector<PropertyResult> properties;
    bool pass = true;

    nlohmann::json to_json() const;
};

/// Registered property suites, one per verified identity family:
/// polarization, product, constant-multiplication, leibniz, growth-bound,
/// norm-sandwich, tensorize-exact, tensorize-bound, tensor-isometry,
/// characters, hull, product-characters, determinism.
std::vector<std::string> suite_names();

/// Runs a suite at the given instance count (0 = the suite's spec-level
/// default). Throws ConfigError for unknown names.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, long instances = 0);

/// Stable per-build environment string embedded in reports.
std::string environment_fingerprint();

/// Independent oracle: all characters of a dim-2 algebra by Newton iteration
/// on the defining equations from a deterministic grid of starts. Used to
/// cross-check enumerate_characters on non-semisimple inputs.
std::vector<Character> brute_force_characters_dim2(const FiniteBanachAlgebra& algebra);

}  // namespace polyalg
