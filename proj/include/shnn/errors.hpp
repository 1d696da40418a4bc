#pragma once

#include <stdexcept>
#include <string>

namespace shnn {

/// Shape or dimensionality violation (odd-length phase vectors, mismatched widths, ...).
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Unknown system id or invalid catalog access.
struct CatalogError : std::invalid_argument {
    explicit CatalogError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// SWIM pair construction received two coincident points.
struct DegeneratePairError : std::runtime_error {
    explicit DegeneratePairError(const std::string& msg) : std::runtime_error(msg) {}
};

/// All candidate-pair densities vanished (e.g. constant function values).
struct DegenerateDataError : std::runtime_error {
    explicit DegenerateDataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Duplicate-avoidance retries exceeded the bound; dataset too small for the layer.
struct SamplingExhaustedError : std::runtime_error {
    explicit SamplingExhaustedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric failure: non-finite inputs, solver breakdown, undefined metric.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid user-facing configuration (CLI flags, config files, schemas).
struct ConfigError : std::invalid_argument {
    explicit ConfigError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace shnn
