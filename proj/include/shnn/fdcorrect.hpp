#pragma once

#include "shnn/integrators.hpp"
#include "shnn/linsolve.hpp"

namespace shnn {

/// Trajectory-pair data: states with their time-h flow images and one anchor.
struct FlowDataset {
    Mat points;       ///< K x 2d, x_i
    Mat next_points;  ///< K x 2d, phi_h(x_i)
    double h = 0.0;
    Vec anchor_point;
    double anchor_value = 0.0;

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
    void validate() const;
};

/// Samples K points uniformly over the box and advances each by the reference
/// flow (RK4, substep 1e-4). Anchor = first point with its true H.
FlowDataset make_flow_dataset(const SystemSpec& system, const DomainBox& box, Eigen::Index n,
                              double h, Rng& rng);

/// Finite-difference assembly: gradient rows are evaluated at the mixed points
/// (phi_h(q_i), p_i); targets are J^{-1} (phi_h(x_i) - x_i)/h. The anchor row
/// is unchanged.
LinearSystem assemble_fd_system(const SampledNetwork& net, const FlowDataset& data);

/// Training on flow data. The samplers draw pairs from the dataset points x_i;
/// swim is unavailable (true H values are unknown on trajectory data).
TrainResult train_fd(const FlowDataset& data, const FitConfig& config);

/// Post-hoc discretization-error correction:
///   H approx Phi + (h/2) <grad_q Phi, grad_p Phi>  per point.
Vec corrected_H(const SampledNetwork& net, const Mat& X, double h);

}  // namespace shnn
