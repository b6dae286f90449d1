#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace polyalg {

/// Exit-code contract: 0 success, 1 invalid config, 2 computation error,
/// 3 suite failure.
struct RunResult {
    int exit_code = 0;
    nlohmann::json output;
    std::string error;
};

/// Dispatches a run configuration:
///   {"objects": {name: object-doc, ...},
///    "command": "eval|polarize|product|norm|hull|tensorize|character|verify-suite|report",
///    "params": {...}, "seed": n, "tolerances": {...}}
/// Identical config + seed produces byte-identical canonical output.
RunResult run_config(const nlohmann::json& config);

}  // namespace polyalg
