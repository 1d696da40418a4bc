#include "shnn/network.hpp"

namespace shnn {

void SampledNetwork::validate() const {
    if (layers.empty()) throw DimensionError("SampledNetwork: needs at least one hidden layer");
    for (std::size_t l = 1; l < layers.size(); ++l)
        if (layers[l].fan_in() != layers[l - 1].width())
            throw DimensionError("SampledNetwork: inconsistent layer shapes");
    for (const auto& layer : layers)
        if (layer.b.size() != layer.W.rows())
            throw DimensionError("SampledNetwork: bias length does not match layer width");
    if (readout_W.size() != layers.back().width())
        throw DimensionError("SampledNetwork: readout width does not match last hidden layer");
}

Mat forward_hidden_prefix(const SampledNetwork& net, const Mat& X, std::size_t n_layers) {
    if (X.cols() != net.input_dim())
        throw DimensionError("forward_hidden: input width does not match network");
    Mat Z = X;
    for (std::size_t l = 0; l < n_layers; ++l) {
        const auto& layer = net.layers[l];
        Z = ((Z * layer.W.transpose()).rowwise() + layer.b.transpose()).array().tanh().matrix();
    }
    return Z;
}

Mat forward_hidden(const SampledNetwork& net, const Mat& X) {
    return forward_hidden_prefix(net, X, net.layers.size());
}

Vec forward(const SampledNetwork& net, const Mat& X) {
    const Mat phi = forward_hidden(net, X);
    return (phi * net.readout_W).array() + net.readout_b;
}

double forward_point(const SampledNetwork& net, const Vec& x) {
    Mat X = x.transpose();
    return forward(net, X)[0];
}

std::vector<Mat> grad_hidden(const SampledNetwork& net, const Mat& X) {
    if (X.cols() != net.input_dim())
        throw DimensionError("grad_hidden: input width does not match network");
    const Eigen::Index n = X.rows();
    std::vector<Mat> jacobians(n);
    // chain rule: J_l = diag(1 - tanh^2(z_l)) W_l J_{l-1}
    Mat Z = X;
    std::vector<Mat> sigma_prime;  // per layer, K x N_l
    sigma_prime.reserve(net.layers.size());
    for (const auto& layer : net.layers) {
        Mat pre = (Z * layer.W.transpose()).rowwise() + layer.b.transpose();
        Z = pre.array().tanh().matrix();
        sigma_prime.push_back((1.0 - Z.array().square()).matrix());
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        Mat J = sigma_prime[0].row(i).asDiagonal() * net.layers[0].W;
        for (std::size_t l = 1; l < net.layers.size(); ++l)
            J = sigma_prime[l].row(i).asDiagonal() * (net.layers[l].W * J);
        jacobians[i] = std::move(J);
    }
    return jacobians;
}

Mat predict_gradH(const SampledNetwork& net, const Mat& X) {
    if (X.cols() != net.input_dim())
        throw DimensionError("predict_gradH: input width does not match network");
    if (net.layers.size() == 1) {
        // single hidden layer: grad Hhat = ((1 - phi^2) .* w) W_1, one GEMM
        const auto& layer = net.layers[0];
        Mat phi = ((X * layer.W.transpose()).rowwise() + layer.b.transpose()).array().tanh();
        Mat scaled =
            ((1.0 - phi.array().square()).rowwise() * net.readout_W.transpose().array()).matrix();
        return scaled * layer.W;
    }
    const auto jacobians = grad_hidden(net, X);
    Mat out(X.rows(), X.cols());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        out.row(i) = net.readout_W.transpose() * jacobians[i];
    return out;
}

Vec predict_gradH_point(const SampledNetwork& net, const Vec& x) {
    Mat X = x.transpose();
    return predict_gradH(net, X).row(0);
}

}  // namespace shnn
