#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "booklie/numeric_bracket.hpp"

namespace booklie {

using Vec3 = std::array<double, 3>;

/// Hamiltonian H = a1 X + a2 Y + a3 Z + b1 log X + b2 log Y + b3 log Z.
/// The log terms restrict the domain to X, Y, Z > 0.
struct LVHamiltonian {
    Vec3 alpha{};
    Vec3 beta{};

    bool has_logs() const { return beta[0] != 0 || beta[1] != 0 || beta[2] != 0; }

    double value(const Vec3& s) const {
        double h = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            h += alpha[i] * s[i];
            if (beta[i] != 0) h += beta[i] * std::log(s[i]);
        }
        return h;
    }

    Vec3 gradient(const Vec3& s) const {
        return {alpha[0] + beta[0] / s[0], alpha[1] + beta[1] / s[1], alpha[2] + beta[2] / s[2]};
    }
};

/// The Lotka-Volterra vector field on the class-C bracket:
///   Xdot = b X [a3 Z - a2 Y + (b3 - b2)]
///   Ydot = b Y [a1 X + a3 Z + (b1 + b3)]
///   Zdot = b Z [-a1 X - a2 Y - (b1 + b2)]
inline Vec3 lv_vector_field(double b, const LVHamiltonian& H, const Vec3& s) {
    const auto& [a1, a2, a3] = H.alpha;
    const auto& [b1, b2, b3] = H.beta;
    return {b * s[0] * (a3 * s[2] - a2 * s[1] + (b3 - b2)),
            b * s[1] * (a1 * s[0] + a3 * s[2] + (b1 + b3)),
            b * s[2] * (-a1 * s[0] - a2 * s[1] - (b1 + b2))};
}

/// Which transcription of the e-term in Zdot to use. The y_variant
/// (-eY[2(a1 Y + b1) + ...]) is not Hamiltonian for the bracket: it
/// breaks the flow identity by 2 e a1 Y (X - Y) and loses conservation.
/// The x_variant (-eY[2(a1 X + b1) + ...]) agrees with the bracket flow
/// exactly and is the default.
enum class ETermVariant { x_variant, y_variant };

/// Five-parameter perturbation of the LV system driven by the full
/// bracket family with the same Hamiltonian.
inline Vec3 deformed_vector_field(const NumericParams& p, const LVHamiltonian& H, const Vec3& s,
                                  ETermVariant variant = ETermVariant::x_variant) {
    const auto& [a1, a2, a3] = H.alpha;
    const auto& [b1, b2, b3] = H.beta;
    const double X = s[0], Y = s[1], Z = s[2];
    const double a = p.a(), b = p.b(), c = p.c(), d = p.d(), e = p.e(), f = p.f();

    const double xdot = b * X * (a3 * Z - a2 * Y + (b3 - b2)) +
                        (a2 + b2 / Y) * (a * X * (X - 1) - 2 * c * X * Z) +
                        (a3 + b3 / Z) * (d * X * (X - 1) + 2 * e * X * Y);

    const double ydot = b * Y * (a1 * X + a3 * Z + (b1 + b3)) +
                        a * ((a3 * Z + b3) - (X - 1) * (a1 * X + b1)) +
                        c * Z * (2 * (a1 * X + b1) + (a3 * Z + b3)) +
                        (a3 + b3 / Z) * (Y * (e * Y - d) + f * (1 - X * X));

    const double e_first = variant == ETermVariant::x_variant ? a1 * X + b1 : a1 * Y + b1;
    const double zdot = b * Z * (-a1 * X - a2 * Y - (b1 + b2)) +
                        d * ((1 - X) * (a1 * X + b1) + (a2 * Y + b2)) +
                        (a2 + b2 / Y) * (f * (X * X - 1) - Z * (a + c * Z)) -
                        e * Y * (2 * e_first + (a2 * Y + b2));

    return {xdot, ydot, zdot};
}

/// Generic Hamiltonian flow Wdot = sum {W, V} dH/dV through the bracket
/// table; the independent oracle for the two closed-form systems.
inline Vec3 hamiltonian_flow(const NumericParams& p, const Vec3& grad, const Vec3& s) {
    const auto B = group_brackets(p, s[0], s[1], s[2]);
    return {B.xy * grad[1] + B.xz * grad[2], -B.xy * grad[0] + B.yz * grad[2],
            -B.xz * grad[0] - B.yz * grad[1]};
}

inline Vec3 hamiltonian_flow(const NumericParams& p, const LVHamiltonian& H, const Vec3& s) {
    return hamiltonian_flow(p, H.gradient(s), s);
}

struct State {
    double t{0};
    Vec3 s{};
};

struct TrajectoryPoint {
    State state;
    double H{0}, C{0};
    double relH{0}, relC{0};
};

enum class RunStatus { ok, domain_exit, step_underflow, max_steps };

inline const char* run_status_name(RunStatus st) {
    switch (st) {
        case RunStatus::ok: return "ok";
        case RunStatus::domain_exit: return "domain-exit";
        case RunStatus::step_underflow: return "step-underflow";
        case RunStatus::max_steps: return "max-steps";
    }
    return "unknown";
}

struct Trajectory {
    std::vector<TrajectoryPoint> points;
    RunStatus status{RunStatus::ok};
    std::size_t accepted{0}, rejected{0};
    double rtol{0}, atol{0};
    std::string message;

    const TrajectoryPoint& back() const { return points.back(); }
    double max_rel_drift_H() const {
        double m = 0;
        for (const auto& pt : points) m = std::max(m, std::abs(pt.relH));
        return m;
    }
    double max_rel_drift_C() const {
        double m = 0;
        for (const auto& pt : points) m = std::max(m, std::abs(pt.relC));
        return m;
    }
};

struct IntegrateOptions {
    double rtol{1e-10};
    double atol{1e-12};
    std::size_t max_steps{1000000};
    double domain_floor{1e-12};
};

/// Explicit embedded Dormand-Prince 5(4) pair with PI step-size control.
/// Records H, the Casimir and their relative drifts at every accepted
/// step; aborts cleanly on domain exit (min coordinate under the floor
/// while the Hamiltonian carries logs) and on step-size underflow,
/// reporting the last good state.
inline Trajectory integrate(const std::function<Vec3(const Vec3&)>& field, const NumericParams& p,
                            const LVHamiltonian& H, const Vec3& s0, double t_end,
                            const IntegrateOptions& opts = {}) {
    // stage abscissae are not needed: the fields here are autonomous
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                            a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                            a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // fifth-order minus embedded fourth-order weights
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    Trajectory out;
    out.rtol = opts.rtol;
    out.atol = opts.atol;

    const double H0 = H.value(s0);
    const double C0 = casimir_value(p, s0[0], s0[1], s0[2]);
    // drift is relative to the initial value, falling back to absolute
    // when that value is below 1 (a near-zero reference would blow the
    // columns up for no physical reason)
    const double Hden = std::max(std::abs(H0), 1.0);
    const double Cden = std::max(std::abs(C0), 1.0);

    auto record = [&](double t, const Vec3& s) {
        const double h = H.value(s);
        const double cval = casimir_value(p, s[0], s[1], s[2]);
        out.points.push_back({{t, s}, h, cval, (h - H0) / Hden, (cval - C0) / Cden});
    };
    auto in_domain = [&](const Vec3& s) {
        if (!H.has_logs()) return true;
        return std::min({s[0], s[1], s[2]}) > opts.domain_floor;
    };

    if (!in_domain(s0)) {
        out.status = RunStatus::domain_exit;
        out.message = "initial state outside the domain";
        return out;
    }
    record(0.0, s0);

    Vec3 y = s0;
    double t = 0;
    Vec3 k1 = field(y);

    // initial step from the scaled norms of y and f(y)
    auto scaled_norm = [&](const Vec3& v, const Vec3& ref) {
        double nrm = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double sc = opts.atol + opts.rtol * std::abs(ref[i]);
            nrm += (v[i] / sc) * (v[i] / sc);
        }
        return std::sqrt(nrm / 3);
    };
    double h = 0.01 * scaled_norm(y, y) / std::max(scaled_norm(k1, y), 1e-10);
    h = std::min({h, std::abs(t_end), 1.0});
    if (h <= 0) h = 1e-6;
    const double dir = t_end >= 0 ? 1.0 : -1.0;
    h *= dir;

    const double safe = 0.9, fac1 = 0.2, fac2 = 10.0, beta = 0.04;
    const double expo1 = 0.2 - beta * 0.75;
    double facold = 1e-4;

    while (dir * (t_end - t) > 1e-14 * std::max(1.0, std::abs(t))) {
        if (out.accepted + out.rejected >= opts.max_steps) {
            out.status = RunStatus::max_steps;
            out.message = "step budget exhausted";
            return out;
        }
        if (dir * (t + h) > dir * t_end) h = t_end - t;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
            out.status = RunStatus::step_underflow;
            out.message = "step size underflow at t = " + std::to_string(t);
            return out;
        }

        auto axpy = [&](std::initializer_list<std::pair<double, const Vec3*>> terms) {
            Vec3 r = y;
            for (const auto& [w, v] : terms)
                for (std::size_t i = 0; i < 3; ++i) r[i] += h * w * (*v)[i];
            return r;
        };
        const Vec3 k2 = field(axpy({{a21, &k1}}));
        const Vec3 k3 = field(axpy({{a31, &k1}, {a32, &k2}}));
        const Vec3 k4 = field(axpy({{a41, &k1}, {a42, &k2}, {a43, &k3}}));
        const Vec3 k5 = field(axpy({{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
        const Vec3 k6 = field(axpy({{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
        const Vec3 y5 = axpy({{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
        const Vec3 k7 = field(y5);

        double err = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                   e7 * k7[i]);
            const double sc = opts.atol + opts.rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / 3);

        const double fac11 = std::pow(std::max(err, 1e-300), expo1);
        double fac = fac11 / std::pow(facold, beta);
        fac = std::max(1.0 / fac2, std::min(1.0 / fac1, fac / safe));
        const double hnew = h / fac;

        if (err <= 1.0) {
            facold = std::max(err, 1e-4);
            t += h;
            y = y5;
            k1 = k7;  // first-same-as-last
            ++out.accepted;
            if (!in_domain(y)) {
                out.status = RunStatus::domain_exit;
                out.message = "state left the domain at t = " + std::to_string(t) +
                              "; last recorded state is the final in-domain one";
                return out;
            }
            record(t, y);
            h = hnew;
        } else {
            ++out.rejected;
            h = hnew;
        }
    }
    return out;
}

/// max |{H, C}| over random states in [1/2, 2]^3; the involution
/// witness for the Hamiltonian and the Casimir.
inline double involution_check(const NumericParams& p, const LVHamiltonian& H, int samples = 100,
                               unsigned seed = 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.5, 2.0);
    double worst = 0;
    for (int t = 0; t < samples; ++t) {
        const Vec3 s = {coord(rng), coord(rng), coord(rng)};
        const auto B = group_brackets(p, s[0], s[1], s[2]);
        const Vec3 gh = H.gradient(s);
        const Vec3 gc = casimir_gradient(p, s[0], s[1], s[2]);
        const double pb = B.xy * (gh[0] * gc[1] - gh[1] * gc[0]) +
                          B.xz * (gh[0] * gc[2] - gh[2] * gc[0]) +
                          B.yz * (gh[1] * gc[2] - gh[2] * gc[1]);
        worst = std::max(worst, std::abs(pb));
    }
    return worst;
}

}  // namespace booklie
