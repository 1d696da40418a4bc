#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "shnn/errors.hpp"
#include "shnn/rng.hpp"

namespace shnn {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// A point x = [q p] in phase space R^{2d}.
struct PhasePoint {
    Vec q;  ///< generalized position, length d
    Vec p;  ///< generalized momentum, length d

    PhasePoint() = default;
    PhasePoint(Vec q_, Vec p_);

    Eigen::Index dof() const { return q.size(); }

    /// Flat coordinates [q; p] of length 2d.
    Vec flat() const;
    static PhasePoint from_flat(const Vec& x);
};

/// Axis-aligned box in phase space; lower/upper have length 2d.
struct DomainBox {
    Vec lower;
    Vec upper;

    DomainBox() = default;
    DomainBox(Vec lower_, Vec upper_);

    Eigen::Index dim() const { return lower.size(); }
    /// min over lower entries; used for the ELM bias range.
    double min_bound() const { return lower.minCoeff(); }
    double max_bound() const { return upper.maxCoeff(); }
};

/// Training data: points with exact time derivatives plus one anchor pair
/// (x0, H(x0)) fixing the integration constant. h_values carries the true
/// Hamiltonian at every point for supervised (SWIM) sampling.
struct Dataset {
    Mat points;       ///< K x 2d, rows are flat phase points
    Mat derivatives;  ///< K x 2d, rows are xdot = J grad H
    Vec h_values;     ///< K true Hamiltonian values
    Vec anchor_point;  ///< flat 2d coordinates of x0
    double anchor_value = 0.0;

    Eigen::Index size() const { return points.rows(); }
    Eigen::Index dim() const { return points.cols(); }
    void validate() const;
};

/// Applies J^{-1} = -J to a velocity vector: (qdot, pdot) -> (-pdot, qdot).
/// This is the gradient target of Hamilton's equations, grad H = J^{-1} xdot.
Vec jinv_apply(const Vec& v);

/// J^{-1} applied to each row of a K x 2d matrix.
Mat jinv_apply_rows(const Mat& v);

/// n i.i.d. uniform draws over the box; coordinates filled point-major so the
/// result is bit-reproducible given (seed, n, box).
Mat sample_domain(const DomainBox& box, Eigen::Index n, Rng& rng);

struct SystemSpec;  // hamiltonians.hpp

/// Uniform points over the box with exact derivatives xdot = J grad H from the
/// catalog's analytic gradient. The anchor is the first sampled point with its
/// true Hamiltonian value.
Dataset make_dataset(const SystemSpec& system, const DomainBox& box, Eigen::Index n, Rng& rng);

}  // namespace shnn
