#pragma once

#include <vector>

#include "shnn/core.hpp"

namespace shnn {

enum class Activation { Tanh };

/// One hidden layer: y = tanh(W x + b), W is N_l x N_{l-1}.
struct HiddenLayer {
    Mat W;
    Vec b;

    Eigen::Index width() const { return W.rows(); }
    Eigen::Index fan_in() const { return W.cols(); }
};

/// Feedforward network with tanh hidden layers and a scalar affine readout.
struct SampledNetwork {
    std::vector<HiddenLayer> layers;
    Vec readout_W;           ///< length N_L
    double readout_b = 0.0;
    Activation activation = Activation::Tanh;

    Eigen::Index input_dim() const { return layers.front().fan_in(); }
    Eigen::Index hidden_width() const { return layers.back().width(); }
    void validate() const;
};

/// Output of the last hidden layer for a batch X (K x 2d) -> K x N_L.
Mat forward_hidden(const SampledNetwork& net, const Mat& X);

/// Hidden outputs of the first `n_layers` layers (n_layers = 0 returns X).
Mat forward_hidden_prefix(const SampledNetwork& net, const Mat& X, std::size_t n_layers);

/// Network predictions Hhat(x) for a batch -> length K.
Vec forward(const SampledNetwork& net, const Mat& X);

/// Jacobians of the last hidden layer w.r.t. the input, one N_L x 2d matrix
/// per batch row.
std::vector<Mat> grad_hidden(const SampledNetwork& net, const Mat& X);

/// Input gradients of the prediction: rows grad Hhat(x_i), K x 2d.
Mat predict_gradH(const SampledNetwork& net, const Mat& X);

/// grad Hhat at a single flat point.
Vec predict_gradH_point(const SampledNetwork& net, const Vec& x);

/// Hhat at a single flat point.
double forward_point(const SampledNetwork& net, const Vec& x);

}  // namespace shnn
