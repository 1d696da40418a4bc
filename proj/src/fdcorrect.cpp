#include "shnn/fdcorrect.hpp"

#include <chrono>

namespace shnn {

void FlowDataset::validate() const {
    if (points.rows() < 1) throw DimensionError("FlowDataset: needs at least one pair");
    if (next_points.rows() != points.rows() || next_points.cols() != points.cols())
        throw DimensionError("FlowDataset: endpoint shape mismatch");
    if (!(h > 0)) throw DimensionError("FlowDataset: h must be positive");
    if (!points.allFinite() || !next_points.allFinite())
        throw NumericError("FlowDataset: non-finite states");
    if (anchor_point.size() != points.cols())
        throw DimensionError("FlowDataset: anchor dimension mismatch");
}

FlowDataset make_flow_dataset(const SystemSpec& system, const DomainBox& box, Eigen::Index n,
                              double h, Rng& rng) {
    if (box.dim() != system.dim())
        throw DimensionError("make_flow_dataset: box dimension does not match system");
    FlowDataset ds;
    ds.h = h;
    ds.points = sample_domain(box, n, rng);
    ds.next_points.resize(n, box.dim());
    for (Eigen::Index i = 0; i < n; ++i)
        ds.next_points.row(i) = rk4_flow_point(system, ds.points.row(i), h);
    ds.anchor_point = ds.points.row(0);
    ds.anchor_value = eval_H(system, Vec(ds.points.row(0)));
    ds.validate();
    return ds;
}

LinearSystem assemble_fd_system(const SampledNetwork& net, const FlowDataset& data) {
    data.validate();
    const Eigen::Index d = data.dim() / 2;
    // mixed evaluation points (phi_h(q_i), p_i)
    Mat eval_points(data.size(), data.dim());
    eval_points.leftCols(d) = data.next_points.leftCols(d);
    eval_points.rightCols(d) = data.points.rightCols(d);
    const Mat fd_velocity = (data.next_points - data.points) / data.h;
    return assemble_rows(net, eval_points, jinv_apply_rows(fd_velocity), data.anchor_point,
                         data.anchor_value);
}

TrainResult train_fd(const FlowDataset& data, const FitConfig& config) {
    config.validate();
    data.validate();
    const auto start = std::chrono::steady_clock::now();
    const auto elapsed = [&start] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    const auto fit = [&](SampledNetwork& net) {
        const LinearSystem sys = assemble_fd_system(net, data);
        Eigen::Index rank = 0;
        const Vec w = solve_least_squares(sys, config.regularization, config.solver, &rank);
        const Eigen::Index N = net.hidden_width();
        net.readout_W = w.head(N);
        net.readout_b = w[N];
        FitDiagnostics diag;
        const Vec r = sys.A * w - sys.u;
        diag.residual = r.norm();
        diag.anchor_residual = std::abs(r[r.size() - 1]);
        diag.gradient_residual = r.head(r.size() - 1).norm();
        diag.rank = rank;
        return diag;
    };

    TrainResult result;
    switch (config.sampler) {
        case Sampler::Elm: {
            Rng rng(derive_stream(config.seed, Stream::Elm));
            result.net.layers = elm_layers(data.dim(), config.widths, config.elm_bias_low,
                                           config.elm_bias_high, rng);
            result.diagnostics = fit(result.net);
            break;
        }
        case Sampler::Uswim: {
            Rng rng(derive_stream(config.seed, Stream::Uswim));
            result.net.layers = uswim_layers(data.points, config.widths, tanh_constants(), rng,
                                             config.pool_size);
            result.diagnostics = fit(result.net);
            break;
        }
        case Sampler::Swim:
            throw ConfigError("train_fd: swim needs true values; trajectory data has none");
        case Sampler::Aswim: {
            Rng rng_u(derive_stream(config.seed, Stream::Uswim));
            SampledNetwork stage1;
            stage1.layers = uswim_layers(data.points, config.widths, tanh_constants(), rng_u,
                                         config.pool_size);
            fit(stage1);
            const Vec predictions = forward(stage1, data.points);
            Rng rng_s(derive_stream(config.seed, Stream::Swim));
            result.net.layers = swim_layers(data.points, predictions, config.widths,
                                            tanh_constants(), config.eps_deep, rng_s,
                                            config.pool_size);
            result.diagnostics = fit(result.net);
            break;
        }
    }
    result.train_time_s = elapsed();
    return result;
}

Vec corrected_H(const SampledNetwork& net, const Mat& X, double h) {
    const Eigen::Index d = X.cols() / 2;
    Vec values = forward(net, X);
    if (h == 0.0) return values;
    const Mat grads = predict_gradH(net, X);
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        values[i] += (h / 2) * grads.row(i).head(d).dot(grads.row(i).tail(d));
    return values;
}

}  // namespace shnn
