#include "shnn/hamiltonians.hpp"

#include <cmath>

namespace shnn {

double eval_H(const SystemSpec& system, const Vec& x) {
    if (x.size() != system.dim()) throw DimensionError("eval_H: dimension mismatch");
    return system.energy(x);
}

double eval_H(const SystemSpec& system, const PhasePoint& x) { return eval_H(system, x.flat()); }

Vec eval_gradH(const SystemSpec& system, const Vec& x) {
    if (x.size() != system.dim()) throw DimensionError("eval_gradH: dimension mismatch");
    return system.energy_grad(x);
}

Vec eval_gradH(const SystemSpec& system, const PhasePoint& x) {
    return eval_gradH(system, x.flat());
}

Vec vector_field(const SystemSpec& system, const Vec& x) {
    const Vec g = eval_gradH(system, x);
    const Eigen::Index d = x.size() / 2;
    Vec v(x.size());
    v.head(d) = g.tail(d);   // qdot = dH/dp
    v.tail(d) = -g.head(d);  // pdot = -dH/dq
    return v;
}

namespace {

DomainBox box2(double ql, double qh, double pl, double ph) {
    Vec lo(2), hi(2);
    lo << ql, pl;
    hi << qh, ph;
    return DomainBox(lo, hi);
}

DomainBox box4(double ql, double qh, double pl, double ph) {
    Vec lo(4), hi(4);
    lo << ql, ql, pl, pl;
    hi << qh, qh, ph, ph;
    return DomainBox(lo, hi);
}

SystemSpec single_pendulum() {
    SystemSpec s;
    s.name = "single_pendulum";
    s.d = 1;
    s.default_domain = box2(-2 * M_PI, 2 * M_PI, -1, 1);
    s.energy = [](const Vec& x) { return x[1] * x[1] / 2 + (1 - std::cos(x[0])); };
    s.energy_grad = [](const Vec& x) {
        Vec g(2);
        g << std::sin(x[0]), x[1];
        return g;
    };
    return s;
}

SystemSpec single_pendulum_freq(double f) {
    SystemSpec s;
    s.name = "single_pendulum_freq";
    s.d = 1;
    s.params["f"] = f;
    s.default_domain = box2(-M_PI, M_PI, -0.5, 0.5);
    s.energy = [f](const Vec& x) { return x[1] * x[1] / 2 + (1 - std::cos(f * x[0])); };
    s.energy_grad = [f](const Vec& x) {
        Vec g(2);
        g << f * std::sin(f * x[0]), x[1];
        return g;
    };
    return s;
}

// H = beta e^q - alpha q + delta e^p - gamma p
SystemSpec lotka_volterra(const std::string& name, double alpha, double beta, double gamma,
                          double delta, DomainBox domain) {
    SystemSpec s;
    s.name = name;
    s.d = 1;
    s.params = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}};
    s.default_domain = std::move(domain);
    s.energy = [=](const Vec& x) {
        return beta * std::exp(x[0]) - alpha * x[0] + delta * std::exp(x[1]) - gamma * x[1];
    };
    s.energy_grad = [=](const Vec& x) {
        Vec g(2);
        g << beta * std::exp(x[0]) - alpha, delta * std::exp(x[1]) - gamma;
        return g;
    };
    return s;
}

// Unit masses, lengths and g; denominator 2(1 + sin^2(q1-q2)) >= 2 everywhere.
SystemSpec double_pendulum() {
    SystemSpec s;
    s.name = "double_pendulum";
    s.d = 2;
    s.default_domain = box4(-M_PI, M_PI, -1, 1);
    s.energy = [](const Vec& x) {
        const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
        const double c = std::cos(q1 - q2), sn = std::sin(q1 - q2);
        const double den = 2 * (1 + sn * sn);
        const double num = p1 * p1 + 2 * p2 * p2 - 2 * p1 * p2 * c;
        return num / den - 2 * std::cos(q1) - std::cos(q2);
    };
    s.energy_grad = [](const Vec& x) {
        const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
        const double delta = q1 - q2;
        const double c = std::cos(delta), sn = std::sin(delta);
        const double den = 2 * (1 + sn * sn);
        const double num = p1 * p1 + 2 * p2 * p2 - 2 * p1 * p2 * c;
        // d/d(delta) of num/den
        const double dnum = 2 * p1 * p2 * sn;
        const double dden = 2 * std::sin(2 * delta);  // d/d(delta) 2(1+sin^2)
        const double dkin = dnum / den - num * dden / (den * den);
        Vec g(4);
        g[0] = dkin + 2 * std::sin(q1);
        g[1] = -dkin + std::sin(q2);
        g[2] = (2 * p1 - 2 * p2 * c) / den;
        g[3] = (4 * p2 - 2 * p1 * c) / den;
        return g;
    };
    return s;
}

SystemSpec henon_heiles(double alpha) {
    SystemSpec s;
    s.name = "henon_heiles";
    s.d = 2;
    s.params["alpha"] = alpha;
    s.default_domain = box4(-5, 5, -5, 5);
    s.energy = [alpha](const Vec& x) {
        const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
        return 0.5 * (p1 * p1 + p2 * p2) + 0.5 * (q1 * q1 + q2 * q2) +
               alpha * (q1 * q1 * q2 - q2 * q2 * q2 / 3);
    };
    s.energy_grad = [alpha](const Vec& x) {
        const double q1 = x[0], q2 = x[1], p1 = x[2], p2 = x[3];
        Vec g(4);
        g << q1 + 2 * alpha * q1 * q2, q2 + alpha * (q1 * q1 - q2 * q2), p1, p2;
        return g;
    };
    return s;
}

}  // namespace

SystemSpec make_system(const std::string& id, double freq) {
    if (id == "single_pendulum") return single_pendulum();
    if (id == "single_pendulum_freq") return single_pendulum_freq(freq);
    if (id == "lotka_volterra_zero")
        return lotka_volterra(id, -2, -1, -1, -1, box2(-2, 2, -2, 2));
    if (id == "lotka_volterra_five")
        return lotka_volterra(id, 3.5, 0.025, 10, 0.07, box2(0, 8, 0, 8));
    if (id == "double_pendulum") return double_pendulum();
    if (id == "henon_heiles") return henon_heiles(1.0);
    throw CatalogError("unknown system id: " + id);
}

std::vector<std::string> catalog_ids() {
    return {"single_pendulum",    "single_pendulum_freq", "lotka_volterra_zero",
            "lotka_volterra_five", "double_pendulum",      "henon_heiles"};
}

}  // namespace shnn
