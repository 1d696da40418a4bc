#include "shnn/linsolve.hpp"

#include <lapacke.h>

#include <chrono>
#include <cmath>

namespace shnn {

Sampler sampler_from_string(const std::string& s) {
    if (s == "elm") return Sampler::Elm;
    if (s == "u-swim") return Sampler::Uswim;
    if (s == "swim") return Sampler::Swim;
    if (s == "a-swim") return Sampler::Aswim;
    throw ConfigError("unknown sampler '" + s + "' (expected elm | u-swim | swim | a-swim)");
}

std::string to_string(Sampler s) {
    switch (s) {
        case Sampler::Elm: return "elm";
        case Sampler::Uswim: return "u-swim";
        case Sampler::Swim: return "swim";
        case Sampler::Aswim: return "a-swim";
    }
    throw ConfigError("invalid sampler enum");
}

void FitConfig::validate() const {
    if (widths.empty()) throw ConfigError("FitConfig: empty width list");
    for (const Eigen::Index w : widths)
        if (w < 1) throw ConfigError("FitConfig: widths must be >= 1");
    if (regularization < 0) throw ConfigError("FitConfig: regularization must be >= 0");
    if (sampler == Sampler::Elm && !(elm_bias_low < elm_bias_high))
        throw ConfigError("FitConfig: ELM bias range is empty; set it from the domain box");
}

LinearSystem assemble_rows(const SampledNetwork& net, const Mat& eval_points,
                           const Mat& gradient_targets, const Vec& anchor_point,
                           double anchor_value) {
    net.validate();
    const Eigen::Index dim = net.input_dim();
    if (eval_points.cols() != dim) throw DimensionError("assemble_rows: input width mismatch");
    if (gradient_targets.rows() != eval_points.rows() || gradient_targets.cols() != dim)
        throw DimensionError("assemble_rows: target shape mismatch");
    if (anchor_point.size() != dim) throw DimensionError("assemble_rows: anchor missing or wrong size");

    const Eigen::Index K = eval_points.rows();
    const Eigen::Index N = net.hidden_width();
    LinearSystem sys;
    sys.A.setZero(dim * K + 1, N + 1);
    sys.u.resize(dim * K + 1);

    if (net.layers.size() == 1) {
        const auto& layer = net.layers[0];
        const Mat phi = ((eval_points * layer.W.transpose()).rowwise() + layer.b.transpose())
                            .array()
                            .tanh()
                            .matrix();
        const Mat sp = (1.0 - phi.array().square()).matrix();  // sigma'(z), K x N
        for (Eigen::Index k = 0; k < N; ++k) {
            double* col = sys.A.col(k).data();
            for (Eigen::Index i = 0; i < K; ++i)
                for (Eigen::Index dd = 0; dd < dim; ++dd)
                    col[i * dim + dd] = sp(i, k) * layer.W(k, dd);
        }
    } else {
        const auto jacobians = grad_hidden(net, eval_points);
        for (Eigen::Index i = 0; i < K; ++i)
            sys.A.block(i * dim, 0, dim, N) = jacobians[static_cast<std::size_t>(i)].transpose();
    }
    for (Eigen::Index i = 0; i < K; ++i)
        sys.u.segment(i * dim, dim) = gradient_targets.row(i).transpose();

    const Mat anchor_row = anchor_point.transpose();
    sys.A.row(dim * K).head(N) = forward_hidden(net, anchor_row).row(0);
    sys.A(dim * K, N) = 1.0;
    sys.u[dim * K] = anchor_value;
    return sys;
}

LinearSystem assemble_system(const SampledNetwork& net, const Dataset& data) {
    data.validate();
    return assemble_rows(net, data.points, jinv_apply_rows(data.derivatives), data.anchor_point,
                         data.anchor_value);
}

namespace {

Vec solve_svd_cutoff(const LinearSystem& sys, double rcond, Eigen::Index* rank_out) {
    const lapack_int m = static_cast<lapack_int>(sys.A.rows());
    const lapack_int n = static_cast<lapack_int>(sys.A.cols());
    Mat scratch = sys.A;  // dgelsd overwrites its input
    Vec rhs = Vec::Zero(std::max(m, n));
    rhs.head(m) = sys.u;
    Vec singular_values(std::min(m, n));
    lapack_int rank = 0;
    const lapack_int info = LAPACKE_dgelsd(
        LAPACK_COL_MAJOR, m, n, 1, scratch.data(), m, rhs.data(),
        static_cast<lapack_int>(rhs.size()), singular_values.data(), rcond, &rank);
    if (info != 0) throw NumericError("dgelsd failed with info=" + std::to_string(info));
    if (rank_out) *rank_out = rank;
    return rhs.head(n);
}

Vec solve_ridge_qr(const LinearSystem& sys, double lambda, Eigen::Index* rank_out) {
    const Eigen::Index m = sys.A.rows();
    const Eigen::Index n = sys.A.cols();
    Mat augmented(m + n, n);
    augmented.topRows(m) = sys.A;
    augmented.bottomRows(n) = std::sqrt(lambda) * Mat::Identity(n, n);
    Vec rhs = Vec::Zero(m + n);
    rhs.head(m) = sys.u;
    const lapack_int info =
        LAPACKE_dgels(LAPACK_COL_MAJOR, 'N', static_cast<lapack_int>(m + n),
                      static_cast<lapack_int>(n), 1, augmented.data(),
                      static_cast<lapack_int>(m + n), rhs.data(),
                      static_cast<lapack_int>(m + n));
    if (info != 0) throw NumericError("dgels failed with info=" + std::to_string(info));
    if (rank_out) *rank_out = n;
    return rhs.head(n);
}

}  // namespace

Vec solve_least_squares(const LinearSystem& sys, double lambda, SolverMode mode,
                        Eigen::Index* rank_out) {
    if (lambda < 0) throw ConfigError("solve_least_squares: lambda must be >= 0");
    if (!sys.A.allFinite() || !sys.u.allFinite())
        throw NumericError("solve_least_squares: non-finite entries");
    if (sys.u.size() != sys.A.rows())
        throw DimensionError("solve_least_squares: rhs length mismatch");
    if (lambda == 0.0) return solve_svd_cutoff(sys, -1.0, rank_out);  // min-norm, eps cutoff
    if (mode == SolverMode::SvdCutoff) return solve_svd_cutoff(sys, lambda, rank_out);
    return solve_ridge_qr(sys, lambda, rank_out);
}

namespace {

FitDiagnostics install_readout(SampledNetwork& net, const LinearSystem& sys, double lambda,
                               SolverMode mode) {
    Eigen::Index rank = 0;
    const Vec w = solve_least_squares(sys, lambda, mode, &rank);
    const Eigen::Index N = net.hidden_width();
    net.readout_W = w.head(N);
    net.readout_b = w[N];
    FitDiagnostics diag;
    const Vec residual_vec = sys.A * w - sys.u;
    diag.residual = residual_vec.norm();
    diag.anchor_residual = std::abs(residual_vec[residual_vec.size() - 1]);
    diag.gradient_residual = residual_vec.head(residual_vec.size() - 1).norm();
    diag.rank = rank;
    return diag;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

FitDiagnostics fit_readout(SampledNetwork& net, const Dataset& data, double lambda,
                           SolverMode mode) {
    const LinearSystem sys = assemble_system(net, data);
    return install_readout(net, sys, lambda, mode);
}

TrainResult train_swim_with_values(const Dataset& data, const FitConfig& config,
                                   const Vec& f_values) {
    config.validate();
    const auto start = Clock::now();
    Rng rng_swim(derive_stream(config.seed, Stream::Swim));
    TrainResult result;
    result.net.layers = swim_layers(data.points, f_values, config.widths, tanh_constants(),
                                    config.eps_deep, rng_swim, config.pool_size);
    result.diagnostics =
        fit_readout(result.net, data, config.regularization, config.solver);
    result.train_time_s = seconds_since(start);
    return result;
}

TrainResult train(const Dataset& data, const FitConfig& config) {
    config.validate();
    data.validate();
    const auto start = Clock::now();
    TrainResult result;
    switch (config.sampler) {
        case Sampler::Elm: {
            Rng rng(derive_stream(config.seed, Stream::Elm));
            result.net.layers = elm_layers(data.dim(), config.widths, config.elm_bias_low,
                                           config.elm_bias_high, rng);
            result.diagnostics =
                fit_readout(result.net, data, config.regularization, config.solver);
            break;
        }
        case Sampler::Uswim: {
            Rng rng(derive_stream(config.seed, Stream::Uswim));
            result.net.layers = uswim_layers(data.points, config.widths, tanh_constants(), rng,
                                             config.pool_size);
            result.diagnostics =
                fit_readout(result.net, data, config.regularization, config.solver);
            break;
        }
        case Sampler::Swim: {
            if (data.h_values.size() != data.size())
                throw ConfigError("train: swim needs true Hamiltonian values in the dataset");
            result = train_swim_with_values(data, config, data.h_values);
            break;
        }
        case Sampler::Aswim: {
            // stage 1: unsupervised fit, same stream as a standalone u-swim run
            Rng rng(derive_stream(config.seed, Stream::Uswim));
            SampledNetwork stage1;
            stage1.layers = uswim_layers(data.points, config.widths, tanh_constants(), rng,
                                         config.pool_size);
            fit_readout(stage1, data, config.regularization, config.solver);
            const Vec predictions = forward(stage1, data.points);
            // stage 2: supervised density on the approximate values
            result = train_swim_with_values(data, config, predictions);
            break;
        }
    }
    result.train_time_s = seconds_since(start);
    return result;
}

}  // namespace shnn
