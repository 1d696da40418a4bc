#include "shnn/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace shnn {

ActivationConstants tanh_constants() {
    const double s2 = std::log(3.0) / 2.0;
    return {2.0 * s2, s2};
}

HiddenLayer elm_layer(Eigen::Index n_in, Eigen::Index n_out, double bias_low, double bias_high,
                      Rng& rng) {
    if (n_in < 1 || n_out < 1) throw DimensionError("elm_layer: widths must be positive");
    if (!(bias_low < bias_high)) throw DimensionError("elm_layer: invalid bias range");
    HiddenLayer layer;
    layer.W.resize(n_out, n_in);
    layer.b.resize(n_out);
    // row-major fill order keeps draws reproducible independent of storage
    for (Eigen::Index i = 0; i < n_out; ++i)
        for (Eigen::Index j = 0; j < n_in; ++j) layer.W(i, j) = rng.normal();
    for (Eigen::Index i = 0; i < n_out; ++i) layer.b[i] = rng.uniform(bias_low, bias_high);
    return layer;
}

std::vector<HiddenLayer> elm_layers(Eigen::Index n_in, const std::vector<Eigen::Index>& widths,
                                    double bias_low, double bias_high, Rng& rng) {
    std::vector<HiddenLayer> layers;
    layers.reserve(widths.size());
    Eigen::Index fan_in = n_in;
    for (const Eigen::Index width : widths) {
        layers.push_back(elm_layer(fan_in, width, bias_low, bias_high, rng));
        fan_in = width;
    }
    return layers;
}

std::pair<Vec, double> pair_to_params(const Vec& x1, const Vec& x2,
                                      const ActivationConstants& c) {
    if (x1.size() != x2.size()) throw DimensionError("pair_to_params: size mismatch");
    const Vec diff = x2 - x1;
    const double norm2 = diff.squaredNorm();
    if (norm2 == 0.0) throw DegeneratePairError("pair_to_params: coincident pair");
    Vec w = (c.s1 / norm2) * diff;
    const double b = -w.dot(x1) - c.s2;
    return {std::move(w), b};
}

Vec swim_density(const std::vector<PairChoice>& pairs, const Vec& f_values,
                 const Mat& layer_inputs, double eps) {
    Vec rho(static_cast<Eigen::Index>(pairs.size()));
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [i, j] = pairs[t];
        const double dist = (layer_inputs.row(j) - layer_inputs.row(i)).norm();
        if (dist == 0.0) {
            rho[static_cast<Eigen::Index>(t)] = 0.0;
            continue;
        }
        const double df = std::abs(f_values[j] - f_values[i]);  // L-inf on scalars
        rho[static_cast<Eigen::Index>(t)] = df / std::max(dist, eps);
    }
    return rho;
}

Eigen::Index default_pool_size(Eigen::Index n_points, const std::vector<Eigen::Index>& widths) {
    Eigen::Index total = 0, largest = 1;
    for (const Eigen::Index w : widths) {
        total += w;
        largest = std::max(largest, w);
    }
    const Eigen::Index all_pairs = n_points * (n_points - 1) / 2;
    return std::max(std::min(10 * total, all_pairs), largest);
}

namespace {

std::vector<PairChoice> draw_pool(Eigen::Index n_points, Eigen::Index pool_size, Rng& rng) {
    std::vector<PairChoice> pool(static_cast<std::size_t>(pool_size));
    for (auto& pc : pool) {
        pc.i = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(n_points)));
        Eigen::Index j = static_cast<Eigen::Index>(rng.index(static_cast<std::size_t>(n_points - 1)));
        pc.j = j + (j >= pc.i ? 1 : 0);
    }
    return pool;
}

/// Draws `width` pairs from the pool with probability proportional to rho,
/// re-drawing duplicates (bounded by 100 * width attempts).
std::vector<PairChoice> select_pairs(const std::vector<PairChoice>& pool, const Vec& rho,
                                     Eigen::Index width, Rng& rng) {
    Vec cumulative(rho.size());
    double total = 0.0;
    for (Eigen::Index t = 0; t < rho.size(); ++t) {
        if (rho[t] < 0.0 || !std::isfinite(rho[t]))
            throw NumericError("select_pairs: invalid density");
        total += rho[t];
        cumulative[t] = total;
    }
    if (total <= 0.0)
        throw DegenerateDataError("select_pairs: all candidate densities are zero");
    std::vector<PairChoice> chosen;
    chosen.reserve(static_cast<std::size_t>(width));
    std::set<std::pair<Eigen::Index, Eigen::Index>> used;
    const Eigen::Index max_attempts = 100 * width;
    Eigen::Index attempts = 0;
    while (static_cast<Eigen::Index>(chosen.size()) < width) {
        if (++attempts > max_attempts)
            throw SamplingExhaustedError("select_pairs: could not draw enough distinct pairs");
        const double u = rng.uniform01() * total;
        const double* begin = cumulative.data();
        const double* pos = std::upper_bound(begin, begin + cumulative.size(), u);
        Eigen::Index t = static_cast<Eigen::Index>(pos - begin);
        if (t >= cumulative.size()) t = cumulative.size() - 1;
        const auto key = std::make_pair(pool[static_cast<std::size_t>(t)].i,
                                        pool[static_cast<std::size_t>(t)].j);
        if (!used.insert(key).second) continue;
        chosen.push_back(pool[static_cast<std::size_t>(t)]);
    }
    return chosen;
}

HiddenLayer layer_from_pairs(const std::vector<PairChoice>& pairs, const Mat& layer_inputs,
                             const ActivationConstants& consts) {
    HiddenLayer layer;
    const Eigen::Index width = static_cast<Eigen::Index>(pairs.size());
    layer.W.resize(width, layer_inputs.cols());
    layer.b.resize(width);
    for (Eigen::Index k = 0; k < width; ++k) {
        const auto& pc = pairs[static_cast<std::size_t>(k)];
        auto [w, b] = pair_to_params(layer_inputs.row(pc.i), layer_inputs.row(pc.j), consts);
        layer.W.row(k) = w.transpose();
        layer.b[k] = b;
    }
    return layer;
}

std::vector<HiddenLayer> swim_family_layers(const Mat& train_inputs, const Vec* f_values,
                                            const std::vector<Eigen::Index>& widths,
                                            const ActivationConstants& consts, double eps_deep,
                                            Rng& rng, Eigen::Index pool_size, PairLog* log) {
    if (train_inputs.rows() < 2)
        throw DimensionError("swim sampling: needs at least two training inputs");
    if (widths.empty()) throw DimensionError("swim sampling: empty width list");
    if (pool_size <= 0) pool_size = default_pool_size(train_inputs.rows(), widths);
    std::vector<HiddenLayer> layers;
    layers.reserve(widths.size());
    if (log) log->clear();
    Mat inputs = train_inputs;  // layer-(l-1) images of the training points
    for (std::size_t l = 0; l < widths.size(); ++l) {
        const auto pool = draw_pool(train_inputs.rows(), pool_size, rng);
        Vec rho;
        if (f_values == nullptr) {
            rho.setOnes(static_cast<Eigen::Index>(pool.size()));
            for (std::size_t t = 0; t < pool.size(); ++t)
                if ((inputs.row(pool[t].j) - inputs.row(pool[t].i)).norm() == 0.0)
                    rho[static_cast<Eigen::Index>(t)] = 0.0;
        } else {
            const double eps = l == 0 ? 0.0 : eps_deep;
            rho = swim_density(pool, *f_values, inputs, eps);
        }
        const auto chosen = select_pairs(pool, rho, widths[l], rng);
        layers.push_back(layer_from_pairs(chosen, inputs, consts));
        if (log) log->push_back(chosen);
        if (l + 1 < widths.size()) {
            const auto& layer = layers.back();
            inputs = ((inputs * layer.W.transpose()).rowwise() + layer.b.transpose())
                         .array()
                         .tanh()
                         .matrix();
        }
    }
    return layers;
}

}  // namespace

std::vector<HiddenLayer> uswim_layers(const Mat& train_inputs,
                                      const std::vector<Eigen::Index>& widths,
                                      const ActivationConstants& consts, Rng& rng,
                                      Eigen::Index pool_size, PairLog* log) {
    return swim_family_layers(train_inputs, nullptr, widths, consts, 0.0, rng, pool_size, log);
}

std::vector<HiddenLayer> swim_layers(const Mat& train_inputs, const Vec& f_values,
                                     const std::vector<Eigen::Index>& widths,
                                     const ActivationConstants& consts, double eps, Rng& rng,
                                     Eigen::Index pool_size, PairLog* log) {
    if (f_values.size() != train_inputs.rows())
        throw DimensionError("swim_layers: f_values must align with training inputs");
    return swim_family_layers(train_inputs, &f_values, widths, consts, eps, rng, pool_size, log);
}

}  // namespace shnn
