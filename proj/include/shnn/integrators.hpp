#pragma once

#include <functional>
#include <vector>

#include "shnn/core.hpp"
#include "shnn/hamiltonians.hpp"

namespace shnn {

/// Gradient oracle: flat x -> grad H(x), length 2d.
using GradFn = std::function<Vec(const Vec&)>;
/// Field oracle: flat x -> (qdot, pdot), length 2d.
using FieldFn = std::function<Vec(const Vec&)>;

/// Uniformly spaced trajectory.
struct Trajectory {
    std::vector<double> times;
    Mat states;  ///< (n_steps+1) x 2d, row k is x(t_k)
    double h = 0.0;
};

/// One symplectic Euler step for a general field v = (qdot, pdot):
///   q' = q + h qdot(q', p),  p' = p + h pdot(q', p).
/// Implicit in q; solved by fixed-point iteration (tol 1e-12, max 100) which
/// terminates after one correction for separable systems.
Vec symplectic_euler_step_field(const FieldFn& field, const Vec& x, double h);

/// Symplectic Euler driven by a gradient oracle via Hamilton's equations.
Vec symplectic_euler_step(const GradFn& gradH, const Vec& x, double h);

/// n_steps applications of symplectic_euler_step from x0.
Trajectory integrate(const GradFn& gradH, const Vec& x0, double h, Eigen::Index n_steps);
Trajectory integrate_field(const FieldFn& field, const Vec& x0, double h, Eigen::Index n_steps);

/// Near-exact reference flow: classical RK4 with internal substeps <= 1e-4,
/// sampled every h_out.
Trajectory reference_flow(const SystemSpec& system, const Vec& x0, double h_out,
                          Eigen::Index n_steps);

/// One RK4 flow map application x -> phi_h(x) with substeps <= max_substep.
Vec rk4_flow_point(const SystemSpec& system, const Vec& x, double h, double max_substep = 1e-4);

/// H evaluated along the trajectory states.
Vec energy_series(const Trajectory& traj, const std::function<double(const Vec&)>& H_fn);

}  // namespace shnn
