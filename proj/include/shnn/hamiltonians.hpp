#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "shnn/core.hpp"

namespace shnn {

/// A closed-form target Hamiltonian with analytic gradient and default domain.
struct SystemSpec {
    std::string name;
    Eigen::Index d = 1;  ///< degrees of freedom
    std::map<std::string, double> params;
    DomainBox default_domain;

    std::function<double(const Vec&)> energy;     ///< H(x), x flat of length 2d
    std::function<Vec(const Vec&)> energy_grad;   ///< (dH/dq, dH/dp), length 2d

    Eigen::Index dim() const { return 2 * d; }
};

/// H(x) for a flat phase point.
double eval_H(const SystemSpec& system, const Vec& x);
double eval_H(const SystemSpec& system, const PhasePoint& x);

/// Analytic gradient (dH/dq, dH/dp).
Vec eval_gradH(const SystemSpec& system, const Vec& x);
Vec eval_gradH(const SystemSpec& system, const PhasePoint& x);

/// Phase-space velocity J grad H = (dH/dp, -dH/dq).
Vec vector_field(const SystemSpec& system, const Vec& x);

/// Catalog ids: single_pendulum, single_pendulum_freq, lotka_volterra_zero,
/// lotka_volterra_five, double_pendulum, henon_heiles.
/// `freq` is the only runtime parameter and applies to single_pendulum_freq.
SystemSpec make_system(const std::string& id, double freq = 1.0);

/// All catalog ids in a fixed order.
std::vector<std::string> catalog_ids();

}  // namespace shnn
