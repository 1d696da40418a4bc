#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "shnn/network.hpp"
#include "shnn/rng.hpp"

namespace shnn {

/// Activation placement constants: tanh maps the pair endpoints to -1/2 and
/// +1/2 with s1 = 2 s2, s2 = ln(3)/2.
struct ActivationConstants {
    double s1;
    double s2;
};

ActivationConstants tanh_constants();

/// Index pair (i, j), i != j, chosen for one neuron; kept for diagnostics.
struct PairChoice {
    Eigen::Index i;
    Eigen::Index j;
};

/// Pair choices per layer, parallel to the produced HiddenLayers.
using PairLog = std::vector<std::vector<PairChoice>>;

/// ELM layer: weights i.i.d. N(0,1), biases i.i.d. Uniform(bias_low, bias_high).
HiddenLayer elm_layer(Eigen::Index n_in, Eigen::Index n_out, double bias_low, double bias_high,
                      Rng& rng);

/// All hidden layers of an ELM network for the given widths.
std::vector<HiddenLayer> elm_layers(Eigen::Index n_in, const std::vector<Eigen::Index>& widths,
                                    double bias_low, double bias_high, Rng& rng);

/// Weight/bias from a pair of layer-input points:
///   w = s1 (x2 - x1)/||x2 - x1||^2,  b = -<w, x1> - s2.
/// Maps x1 -> tanh(-s2) = -1/2, x2 -> +1/2 and the midpoint -> 0.
std::pair<Vec, double> pair_to_params(const Vec& x1, const Vec& x2, const ActivationConstants& c);

/// Unnormalized sampling densities for candidate pairs at one layer:
///   |f(x_j) - f(x_i)| / max(||z_j - z_i||, eps),  0 when the layer images coincide.
/// `layer_inputs` are the layer-(l-1) images z; `f_values` are function values
/// at the original points.
Vec swim_density(const std::vector<PairChoice>& pairs, const Vec& f_values,
                 const Mat& layer_inputs, double eps);

/// Uniform-pair SWIM construction (unsupervised).
std::vector<HiddenLayer> uswim_layers(const Mat& train_inputs,
                                      const std::vector<Eigen::Index>& widths,
                                      const ActivationConstants& consts, Rng& rng,
                                      Eigen::Index pool_size = 0, PairLog* log = nullptr);

/// Supervised SWIM: candidate pairs drawn uniformly, neurons drawn with
/// probability proportional to swim_density, duplicates re-drawn.
std::vector<HiddenLayer> swim_layers(const Mat& train_inputs, const Vec& f_values,
                                     const std::vector<Eigen::Index>& widths,
                                     const ActivationConstants& consts, double eps, Rng& rng,
                                     Eigen::Index pool_size = 0, PairLog* log = nullptr);

/// Default candidate pool: min(10 * total neurons, K (K-1)/2), at least the
/// largest layer width.
Eigen::Index default_pool_size(Eigen::Index n_points, const std::vector<Eigen::Index>& widths);

}  // namespace shnn
