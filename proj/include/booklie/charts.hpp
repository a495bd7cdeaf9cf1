#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>

#include "booklie/numeric_bracket.hpp"

namespace booklie {

/// Invertible coordinate transform between the group coordinates
/// (X,Y,Z), X > 0, and a named chart:
///   standard:     X = exp(-2 eta J3), Y = exp(-eta J3) J+, Z = exp(-eta J3) J-
///   nonstandard:  X = exp(-2 phi J-), Y = exp(-phi J-) J+, Z = exp(-phi J-) J3
///   local:        X = exp(-x),        Y = y,               Z = z
/// Chart points are ordered (J3, J+, J-) for the deformed charts and
/// (x, y, z) for the local one.
class Chart {
public:
    enum class Kind { standard, nonstandard, local };

    Chart(Kind kind, double parameter) : kind_(kind), par_(parameter) {
        if (kind_ != Kind::local && par_ == 0.0)
            throw std::invalid_argument("Chart: deformation parameter must be nonzero");
    }

    Kind kind() const { return kind_; }
    double parameter() const { return par_; }

    std::array<const char*, 3> coordinate_names() const {
        if (kind_ == Kind::local) return {"x", "y", "z"};
        return {"J3", "J+", "J-"};
    }

    std::array<double, 3> forward(const std::array<double, 3>& p) const {
        switch (kind_) {
            case Kind::standard: {
                const double s = std::exp(-par_ * p[0]);
                return {s * s, s * p[1], s * p[2]};
            }
            case Kind::nonstandard: {
                const double s = std::exp(-par_ * p[2]);
                return {s * s, s * p[1], s * p[0]};
            }
            case Kind::local:
            default:
                return {std::exp(-p[0]), p[1], p[2]};
        }
    }

    std::array<double, 3> inverse(const std::array<double, 3>& xyz) const {
        const double X = xyz[0];
        if (X <= 0.0) throw std::domain_error("Chart::inverse: X must be positive");
        const double rootinv = 1.0 / std::sqrt(X);
        switch (kind_) {
            case Kind::standard:
                return {-std::log(X) / (2 * par_), xyz[1] * rootinv, xyz[2] * rootinv};
            case Kind::nonstandard:
                return {xyz[2] * rootinv, xyz[1] * rootinv, -std::log(X) / (2 * par_)};
            case Kind::local:
            default:
                return {-std::log(X), xyz[1], xyz[2]};
        }
    }

    /// Rows: chart coordinates, columns: d/d(X,Y,Z), evaluated at (X,Y,Z).
    std::array<std::array<double, 3>, 3> inverse_jacobian(const std::array<double, 3>& xyz) const {
        const double X = xyz[0];
        if (X <= 0.0) throw std::domain_error("Chart::inverse_jacobian: X must be positive");
        const double rootinv = 1.0 / std::sqrt(X);
        const double droot = -0.5 * rootinv / X;  // d/dX X^(-1/2)
        switch (kind_) {
            case Kind::standard:
                return {{{-1.0 / (2 * par_ * X), 0, 0},
                         {xyz[1] * droot, rootinv, 0},
                         {xyz[2] * droot, 0, rootinv}}};
            case Kind::nonstandard:
                return {{{xyz[2] * droot, 0, rootinv},
                         {xyz[1] * droot, rootinv, 0},
                         {-1.0 / (2 * par_ * X), 0, 0}}};
            case Kind::local:
            default:
                return {{{-1.0 / X, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        }
    }

private:
    Kind kind_;
    double par_;
};

/// {J_i, J_j} at a chart point, computed by the chain rule through the
/// group-chart brackets.
inline double pushforward_bracket(const NumericParams& p, const Chart& chart, int i, int j,
                                  const std::array<double, 3>& point) {
    const auto xyz = chart.forward(point);
    const auto B = group_brackets(p, xyz[0], xyz[1], xyz[2]);
    const auto J = chart.inverse_jacobian(xyz);
    const auto ii = static_cast<std::size_t>(i);
    const auto jj = static_cast<std::size_t>(j);
    return (J[ii][0] * J[jj][1] - J[ii][1] * J[jj][0]) * B.xy +
           (J[ii][0] * J[jj][2] - J[ii][2] * J[jj][0]) * B.xz +
           (J[ii][1] * J[jj][2] - J[ii][2] * J[jj][1]) * B.yz;
}

/// Full-family closed forms in the standard chart coordinates.
inline double generic_standard_bracket(const NumericParams& p, double eta, int i, int j,
                                       const std::array<double, 3>& J) {
    if (i == j) return 0.0;
    if (i > j) return -generic_standard_bracket(p, eta, j, i, J);
    const double J3 = J[0], Jp = J[1], Jm = J[2];
    if (i == 0 && j == 1) return p.a() * std::sinh(eta * J3) / eta + p.b() / (2 * eta) * Jp + p.c() / eta * Jm;
    if (i == 0 && j == 2) return p.d() * std::sinh(eta * J3) / eta - p.e() / eta * Jp - p.b() / (2 * eta) * Jm;
    return 2 * p.f() * std::sinh(2 * eta * J3) + std::cosh(eta * J3) * (-p.d() * Jp + p.a() * Jm);
}

/// Full-family closed forms in the nonstandard chart coordinates.
inline double generic_nonstandard_bracket(const NumericParams& p, double phi, int i, int j,
                                          const std::array<double, 3>& J) {
    if (i == j) return 0.0;
    if (i > j) return -generic_nonstandard_bracket(p, phi, j, i, J);
    const double J3 = J[0], Jp = J[1], Jm = J[2];
    if (i == 0 && j == 1)
        return -2 * p.f() * std::sinh(2 * phi * Jm) + std::cosh(phi * Jm) * (p.d() * Jp - p.a() * J3);
    if (i == 0 && j == 2)
        return -p.d() * std::sinh(phi * Jm) / phi + p.e() / phi * Jp + p.b() / (2 * phi) * J3;
    return -p.a() * std::sinh(phi * Jm) / phi - p.b() / (2 * phi) * Jp - p.c() / phi * J3;
}

/// Casimir in the standard chart coordinates.
inline double generic_standard_casimir(const NumericParams& p, double eta, const std::array<double, 3>& J) {
    const double J3 = J[0], Jp = J[1], Jm = J[2];
    return 2 * p.f() * std::cosh(2 * eta * J3) + 2 * std::sinh(eta * J3) * (-p.d() * Jp + p.a() * Jm) +
           p.e() * Jp * Jp + Jm * (p.b() * Jp + p.c() * Jm);
}

inline double generic_nonstandard_casimir(const NumericParams& p, double phi, const std::array<double, 3>& J) {
    const double J3 = J[0], Jp = J[1], Jm = J[2];
    return 2 * p.f() * std::cosh(2 * phi * Jm) + 2 * std::sinh(phi * Jm) * (-p.d() * Jp + p.a() * J3) +
           p.e() * Jp * Jp + J3 * (p.b() * Jp + p.c() * J3);
}

/// A named Poisson algebra realized on the book group: a Table 1
/// parameter binding, its chart, and the reference closed-form brackets
/// and Casimir those bindings produce.
struct NamedStructure {
    std::string id;
    Chart chart;
    NumericParams params;
    std::function<double(int, int, const std::array<double, 3>&)> closed_bracket;
    std::function<double(const std::array<double, 3>&)> closed_casimir;
};

inline const std::array<const char*, 9>& named_structure_ids() {
    static const std::array<const char*, 9> ids = {
        "lv-poincare",  "sl2-standard", "sl2-nonstandard", "heisenberg-q", "euclidean-nonstandard",
        "so-q",         "euclidean-f",  "heisenberg-g",    "e2e11-q"};
    return ids;
}

/// Builds a named structure at the given deformation parameter
/// (eta for standard-chart structures, phi for nonstandard-chart ones).
inline NamedStructure named_structure(const std::string& id, double def = 1.0) {
    if (def == 0.0) throw std::invalid_argument("named_structure: deformation parameter must be nonzero");
    NamedStructure s{id, Chart(Chart::Kind::standard, def), {}, nullptr, nullptr};

    if (id == "lv-poincare") {
        // class C at b = 1: the (1+1) Poincare / pseudoeuclidean algebra
        // in the null-plane basis
        const double b = 1.0;
        s.params.v = {0, b, 0, 0, 0, 0};
        s.closed_bracket = [b, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return b / (2 * def) * J[1];
            if (i == 0 && j == 2) return -b / (2 * def) * J[2];
            return 0.0;
        };
        s.closed_casimir = [b](const std::array<double, 3>& J) { return b * J[1] * J[2]; };
    } else if (id == "sl2-standard") {
        // class D at b = 2 eta, f = 1/(2 eta): standard q-deformation of sl(2)
        s.params.v = {0, 2 * def, 0, 0, 0, 1 / (2 * def)};
        s.closed_bracket = [def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return J[1];
            if (i == 0 && j == 2) return -J[2];
            if (i == 1 && j == 2) return std::sinh(2 * def * J[0]) / def;
            return 0.0;
        };
        s.closed_casimir = [def](const std::array<double, 3>& J) {
            return std::cosh(2 * def * J[0]) / def + 2 * def * J[1] * J[2];
        };
    } else if (id == "sl2-nonstandard") {
        // class I at c = -2 phi, d = 1: nonstandard (Jordanian) deformation
        s.chart = Chart(Chart::Kind::nonstandard, def);
        s.params.v = {0, 0, -2 * def, 1, 0, 0};
        s.closed_bracket = [def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return J[1] * std::cosh(def * J[2]);
            if (i == 0 && j == 2) return -std::sinh(def * J[2]) / def;
            if (i == 1 && j == 2) return 2 * J[0];
            return 0.0;
        };
        s.closed_casimir = [def](const std::array<double, 3>& J) {
            return -2 * def * J[0] * J[0] - 2 * std::sinh(def * J[2]) * J[1];
        };
    } else if (id == "heisenberg-q") {
        // class A at f = 1/(4 eta): q-Heisenberg
        const double f = 1 / (4 * def);
        s.params.v = {0, 0, 0, 0, 0, f};
        s.closed_bracket = [f, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 1 && j == 2) return 2 * f * std::sinh(2 * def * J[0]);
            return 0.0;
        };
        s.closed_casimir = [f, def](const std::array<double, 3>& J) {
            return 2 * f * std::cosh(2 * def * J[0]);
        };
    } else if (id == "euclidean-nonstandard") {
        // class B at d = 1: nonstandard (pseudo)euclidean algebra
        const double d = 1.0;
        s.chart = Chart(Chart::Kind::nonstandard, def);
        s.params.v = {0, 0, 0, d, 0, 0};
        s.closed_bracket = [d, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return d * J[1] * std::cosh(def * J[2]);
            if (i == 0 && j == 2) return -d * std::sinh(def * J[2]) / def;
            return 0.0;
        };
        s.closed_casimir = [d, def](const std::array<double, 3>& J) {
            return -2 * d * std::sinh(def * J[2]) * J[1];
        };
    } else if (id == "so-q") {
        // class E at c = e = eta, f = 1/eta: q-so(3) / q-so(2,1) by sign of f
        const double c = def, f = 1 / def;
        s.params.v = {0, 0, c, 0, c, f};
        s.closed_bracket = [c, f, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return c / def * J[2];
            if (i == 0 && j == 2) return -c / def * J[1];
            if (i == 1 && j == 2) return 2 * f * std::sinh(2 * def * J[0]);
            return 0.0;
        };
        s.closed_casimir = [c, f, def](const std::array<double, 3>& J) {
            return 2 * f * std::cosh(2 * def * J[0]) + c * J[1] * J[1] + c * J[2] * J[2];
        };
    } else if (id == "euclidean-f") {
        // class F = class E in the f -> 0 limit; deformed coproduct,
        // undeformed brackets
        const double c = def;
        s.params.v = {0, 0, c, 0, c, 0};
        s.closed_bracket = [c, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return c / def * J[2];
            if (i == 0 && j == 2) return -c / def * J[1];
            return 0.0;
        };
        s.closed_casimir = [c](const std::array<double, 3>& J) {
            return c * J[1] * J[1] + c * J[2] * J[2];
        };
    } else if (id == "heisenberg-g") {
        // class G: Poisson-Heisenberg with deformed coproduct
        const double c = -0.5;
        s.params.v = {0, 0, c, 0, 0, 0};
        s.closed_bracket = [c, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return c / def * J[2];
            return 0.0;
        };
        s.closed_casimir = [c](const std::array<double, 3>& J) { return c * J[2] * J[2]; };
    } else if (id == "e2e11-q") {
        // class H at c = -1/2, f = 1/eta: q-e(2) / q-e(1,1) by sign of f
        const double c = -0.5, f = 1 / def;
        s.params.v = {0, 0, c, 0, 0, f};
        s.closed_bracket = [c, f, def](int i, int j, const std::array<double, 3>& J) {
            if (i == 0 && j == 1) return c / def * J[2];
            if (i == 1 && j == 2) return 2 * f * std::sinh(2 * def * J[0]);
            return 0.0;
        };
        s.closed_casimir = [c, f, def](const std::array<double, 3>& J) {
            return 2 * f * std::cosh(2 * def * J[0]) + c * J[2] * J[2];
        };
    } else {
        throw std::invalid_argument("named_structure: unknown id '" + id + "'");
    }

    // antisymmetric completion shared by all closed-form tables
    auto base = s.closed_bracket;
    s.closed_bracket = [base](int i, int j, const std::array<double, 3>& J) {
        if (i == j) return 0.0;
        if (i < j) return base(i, j, J);
        return -base(j, i, J);
    };
    return s;
}

/// Affine relation C = k1 * Ctilde + k0 between the transported generic
/// Casimir and a reference Casimir, solved from two probe points and
/// verified across random samples.
struct CasimirRelation {
    double k1{0}, k0{0}, max_err{0};
};

inline CasimirRelation casimir_relation(const std::string& id, double def = 1.0,
                                        int samples = 100, unsigned seed = 0) {
    const NamedStructure s = named_structure(id, def);
    std::function<double(const std::array<double, 3>&)> reference;
    if (id == "sl2-standard") {
        reference = [def](const std::array<double, 3>& J) {
            const double sh = std::sinh(def * J[0]);
            return sh * sh / (def * def) + J[1] * J[2];
        };
    } else if (id == "sl2-nonstandard") {
        reference = [def](const std::array<double, 3>& J) {
            return J[0] * J[0] + J[1] * std::sinh(def * J[2]) / def;
        };
    } else {
        throw std::invalid_argument("casimir_relation: no reference Casimir for id '" + id + "'");
    }

    auto transported = [&](const std::array<double, 3>& J) {
        const auto xyz = s.chart.forward(J);
        return casimir_value(s.params, xyz[0], xyz[1], xyz[2]);
    };

    const std::array<double, 3> p1 = {0.3, 0.7, -0.4};
    const std::array<double, 3> p2 = {-0.6, 0.2, 0.9};
    const double denom = reference(p1) - reference(p2);
    if (std::abs(denom) < 1e-12)
        throw std::runtime_error("casimir_relation: degenerate probe points");
    CasimirRelation rel;
    rel.k1 = (transported(p1) - transported(p2)) / denom;
    rel.k0 = transported(p1) - rel.k1 * reference(p1);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (int t = 0; t < samples; ++t) {
        const std::array<double, 3> J = {coord(rng), coord(rng), coord(rng)};
        rel.max_err = std::max(rel.max_err,
                               std::abs(transported(J) - rel.k1 * reference(J) - rel.k0));
    }
    return rel;
}

/// Residuals of the transformed coproduct: the log coordinate is
/// primitive and the other two follow the twisted rule
/// Delta(J) = exp(-par K) (x) J + J (x) exp(par K), checked against the
/// group law pushed through the chart at random point pairs.
struct CoproductCheck {
    std::array<double, 3> max_residual{};
};

inline CoproductCheck deformed_coproduct_check(const Chart& chart, int pairs = 50, unsigned seed = 0) {
    if (chart.kind() == Chart::Kind::local)
        throw std::invalid_argument("deformed_coproduct_check: deformed charts only");
    CoproductCheck out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    const double par = chart.parameter();
    const bool standard = chart.kind() == Chart::Kind::standard;
    const int log_slot = standard ? 0 : 2;  // J3 or J-

    for (int t = 0; t < pairs; ++t) {
        const std::array<double, 3> P1 = {coord(rng), coord(rng), coord(rng)};
        const std::array<double, 3> P2 = {coord(rng), coord(rng), coord(rng)};
        const auto G1 = chart.forward(P1);
        const auto G2 = chart.forward(P2);
        const std::array<double, 3> Gp = {G1[0] * G2[0], G1[0] * G2[1] + G1[1], G1[0] * G2[2] + G1[2]};
        const auto Jp = chart.inverse(Gp);

        const double twist1 = std::exp(-par * P1[static_cast<std::size_t>(log_slot)]);
        const double twist2 = std::exp(par * P2[static_cast<std::size_t>(log_slot)]);
        for (int g = 0; g < 3; ++g) {
            const auto gs = static_cast<std::size_t>(g);
            const double expected = g == log_slot ? P1[gs] + P2[gs] : twist1 * P2[gs] + P1[gs] * twist2;
            out.max_residual[gs] = std::max(out.max_residual[gs], std::abs(Jp[gs] - expected));
        }
    }
    return out;
}

}  // namespace booklie
