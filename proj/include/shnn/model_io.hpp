#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "shnn/network.hpp"

namespace shnn {

inline constexpr int kModelSchemaVersion = 1;

/// Provenance stored beside the weights.
struct ModelMeta {
    std::string sampler;
    std::uint64_t seed = 0;
    double residual = 0.0;
};

/// JSON object {schema_version, activation, d, layers:[{W, b}], readout:{W, b},
/// meta:{sampler, seed, residual}} with W in row-major nested arrays. Doubles
/// round-trip bit-exactly.
std::string model_to_json(const SampledNetwork& net, const ModelMeta& meta);

/// Throws ConfigError naming the missing or malformed key.
SampledNetwork model_from_json(const std::string& text, ModelMeta* meta_out = nullptr);

void save_model(const std::string& path, const SampledNetwork& net, const ModelMeta& meta);
SampledNetwork load_model(const std::string& path, ModelMeta* meta_out = nullptr);

}  // namespace shnn
