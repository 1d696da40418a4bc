#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shnn/network.hpp"
#include "shnn/samplers.hpp"

namespace shnn {

/// The fully linear readout system: gradient rows for every data point plus
/// one anchor row. A is (2dK+1) x (N_L+1); the last column is 0 on gradient
/// rows and 1 on the anchor row.
struct LinearSystem {
    Mat A;
    Vec u;
};

enum class Sampler { Elm, Uswim, Swim, Aswim };

Sampler sampler_from_string(const std::string& s);
std::string to_string(Sampler s);

/// Least-squares backend. SvdCutoff treats singular values below
/// regularization * sigma_max as zero and returns the min-norm solution over
/// the retained subspace; RidgeQr solves the augmented system [A; sqrt(l) I].
enum class SolverMode { SvdCutoff, RidgeQr };

struct FitConfig {
    Sampler sampler = Sampler::Aswim;
    std::vector<Eigen::Index> widths{1000};
    double regularization = 1e-13;
    std::uint64_t seed = 0;
    SolverMode solver = SolverMode::SvdCutoff;
    Eigen::Index pool_size = 0;  ///< 0 = default_pool_size
    double eps_deep = 1e-10;     ///< denominator floor for layers l > 1
    double elm_bias_low = 0.0;   ///< ELM bias range, wired from the domain box
    double elm_bias_high = 0.0;

    void validate() const;
};

/// Solver diagnostics recorded with every fit.
struct FitDiagnostics {
    double residual = 0.0;         ///< ||A w - u||
    double gradient_residual = 0.0;  ///< residual over the gradient rows only
    double anchor_residual = 0.0;  ///< |last-row residual|
    Eigen::Index rank = 0;         ///< effective rank reported by the solver
};

struct TrainResult {
    SampledNetwork net;
    FitDiagnostics diagnostics;
    double train_time_s = 0.0;  ///< sampling + assembly + solve
};

/// Builds the gradient rows at eval_points with targets `gradient_targets`
/// (rows J^{-1} xdot) and the anchor row at anchor_point. Shared by the exact
/// and the finite-difference assembler.
LinearSystem assemble_rows(const SampledNetwork& net, const Mat& eval_points,
                           const Mat& gradient_targets, const Vec& anchor_point,
                           double anchor_value);

/// Eq-style assembly for exact-derivative data.
LinearSystem assemble_system(const SampledNetwork& net, const Dataset& data);

/// Minimizes ||A w - u||^2 (+ lambda ||w||^2 in RidgeQr mode). lambda = 0 with
/// SvdCutoff gives the minimum-norm least-squares solution.
Vec solve_least_squares(const LinearSystem& sys, double lambda,
                        SolverMode mode = SolverMode::SvdCutoff,
                        Eigen::Index* rank_out = nullptr);

/// Assembles, solves and installs the readout; fills diagnostics.
FitDiagnostics fit_readout(SampledNetwork& net, const Dataset& data, double lambda,
                           SolverMode mode = SolverMode::SvdCutoff);

/// End-to-end training: sample hidden layers per config, fit the readout.
/// a-swim runs U-SWIM, fits, predicts on the training inputs and resamples all
/// hidden layers with the SWIM density on those predictions, then fits again.
TrainResult train(const Dataset& data, const FitConfig& config);

/// The supervised-density stage shared by swim and a-swim: samples hidden
/// layers with the SWIM density on `f_values` (true values for swim, stage-1
/// predictions for a-swim) using the config's swim stream, then fits.
TrainResult train_swim_with_values(const Dataset& data, const FitConfig& config,
                                   const Vec& f_values);

}  // namespace shnn
