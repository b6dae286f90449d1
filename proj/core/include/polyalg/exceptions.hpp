#pragma once

#include <stdexcept>
#include <string>

namespace polyalg {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Lourenco construction with psi(e) = 0: E = ker psi + Ce fails.
struct InvalidDecomposition : std::invalid_argument {
    explicit InvalidDecomposition(const std::string& what) : std::invalid_argument(what) {}
};

// Multiplication family without a usable joint eigenstructure.
struct UnsupportedAlgebra : std::runtime_error {
    explicit UnsupportedAlgebra(const std::string& what) : std::runtime_error(what) {}
};

// polarize() on a degree-0 representation.
struct NoPolarization : std::invalid_argument {
    explicit NoPolarization(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct ComputeError : std::runtime_error {
    explicit ComputeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyalg
