#include "shnn/integrators.hpp"

#include <cmath>

namespace shnn {

namespace {
constexpr double kFixedPointTol = 1e-12;
constexpr int kFixedPointMaxIter = 100;
}  // namespace

Vec symplectic_euler_step_field(const FieldFn& field, const Vec& x, double h) {
    if (!(h > 0)) throw DimensionError("symplectic_euler_step: h must be positive");
    const Eigen::Index d = x.size() / 2;
    if (x.size() % 2 != 0 || d == 0)
        throw DimensionError("symplectic_euler_step: state length must be even");
    const Vec q = x.head(d);
    const Vec p = x.tail(d);
    // q' = q + h qdot(q', p): fixed point, exact after one correction for
    // separable systems where qdot does not depend on q
    Vec state = x;
    Vec q_next = q;
    bool converged = false;
    for (int iter = 0; iter < kFixedPointMaxIter; ++iter) {
        state.head(d) = q_next;
        const Vec q_new = q + h * field(state).head(d);
        const double delta = (q_new - q_next).lpNorm<Eigen::Infinity>();
        q_next = q_new;
        if (delta <= kFixedPointTol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericError("symplectic_euler_step: fixed-point iteration did not converge");
    state.head(d) = q_next;
    Vec next(x.size());
    next.head(d) = q_next;
    next.tail(d) = p + h * field(state).tail(d);
    return next;
}

Vec symplectic_euler_step(const GradFn& gradH, const Vec& x, double h) {
    const Eigen::Index d = x.size() / 2;
    const FieldFn field = [&gradH, d](const Vec& y) {
        const Vec g = gradH(y);
        Vec v(y.size());
        v.head(d) = g.tail(d);
        v.tail(d) = -g.head(d);
        return v;
    };
    return symplectic_euler_step_field(field, x, h);
}

namespace {

Trajectory integrate_impl(const std::function<Vec(const Vec&, double)>& step, const Vec& x0,
                          double h, Eigen::Index n_steps) {
    if (n_steps < 0) throw DimensionError("integrate: n_steps must be >= 0");
    Trajectory traj;
    traj.h = h;
    traj.times.resize(static_cast<std::size_t>(n_steps) + 1);
    traj.states.resize(n_steps + 1, x0.size());
    traj.states.row(0) = x0.transpose();
    traj.times[0] = 0.0;
    Vec x = x0;
    for (Eigen::Index k = 0; k < n_steps; ++k) {
        try {
            x = step(x, h);
        } catch (const NumericError& e) {
            throw NumericError("integrate: step " + std::to_string(k) + " failed: " + e.what());
        }
        traj.states.row(k + 1) = x.transpose();
        traj.times[static_cast<std::size_t>(k) + 1] = static_cast<double>(k + 1) * h;
    }
    return traj;
}

}  // namespace

Trajectory integrate(const GradFn& gradH, const Vec& x0, double h, Eigen::Index n_steps) {
    return integrate_impl(
        [&gradH](const Vec& x, double hh) { return symplectic_euler_step(gradH, x, hh); }, x0, h,
        n_steps);
}

Trajectory integrate_field(const FieldFn& field, const Vec& x0, double h, Eigen::Index n_steps) {
    return integrate_impl(
        [&field](const Vec& x, double hh) { return symplectic_euler_step_field(field, x, hh); },
        x0, h, n_steps);
}

Vec rk4_flow_point(const SystemSpec& system, const Vec& x, double h, double max_substep) {
    const Eigen::Index n_sub = std::max<Eigen::Index>(
        1, static_cast<Eigen::Index>(std::ceil(h / max_substep - 1e-12)));
    const double hh = h / static_cast<double>(n_sub);
    Vec y = x;
    for (Eigen::Index s = 0; s < n_sub; ++s) {
        const Vec k1 = vector_field(system, y);
        const Vec k2 = vector_field(system, y + (hh / 2) * k1);
        const Vec k3 = vector_field(system, y + (hh / 2) * k2);
        const Vec k4 = vector_field(system, y + hh * k3);
        y += (hh / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return y;
}

Trajectory reference_flow(const SystemSpec& system, const Vec& x0, double h_out,
                          Eigen::Index n_steps) {
    return integrate_impl(
        [&system](const Vec& x, double hh) { return rk4_flow_point(system, x, hh); }, x0, h_out,
        n_steps);
}

Vec energy_series(const Trajectory& traj, const std::function<double(const Vec&)>& H_fn) {
    Vec energies(traj.states.rows());
    for (Eigen::Index k = 0; k < traj.states.rows(); ++k) energies[k] = H_fn(traj.states.row(k));
    return energies;
}

}  // namespace shnn
