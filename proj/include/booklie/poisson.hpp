#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "booklie/poly.hpp"
#include "booklie/rational_function.hpp"

namespace booklie {

/// The six parameters (a,b,c,d,e,f) of the quadratic Poisson-Lie family
/// on the book group. Each slot holds an exact polynomial value: a
/// rational constant in numeric mode, the matching formal symbol in
/// symbolic mode, or an expression in other symbols (as needed for the
/// coboundary identification a = r13, d = r23, f = -r12).
struct PLParams {
    std::array<Poly, 6> v;

    static PLParams symbolic() {
        return {{Poly::variable(vars::a), Poly::variable(vars::b), Poly::variable(vars::c),
                 Poly::variable(vars::d), Poly::variable(vars::e), Poly::variable(vars::f)}};
    }

    static PLParams numeric(const std::array<Rational, 6>& r) {
        PLParams p;
        for (int i = 0; i < 6; ++i) p.v[i] = Poly::constant(r[i]);
        return p;
    }

    static PLParams zero() { return numeric({}); }

    const Poly& a() const { return v[0]; }
    const Poly& b() const { return v[1]; }
    const Poly& c() const { return v[2]; }
    const Poly& d() const { return v[3]; }
    const Poly& e() const { return v[4]; }
    const Poly& f() const { return v[5]; }

    bool is_numeric() const {
        for (const auto& p : v)
            if (!p.is_constant()) return false;
        return true;
    }

    std::array<Rational, 6> values() const {
        if (!is_numeric()) throw std::invalid_argument("PLParams: numeric values requested from symbolic parameters");
        std::array<Rational, 6> r;
        for (int i = 0; i < 6; ++i) r[i] = v[i].constant_value();
        return r;
    }
};

enum class ChartTag { group, local };

/// A Poisson structure on the book group in one of its two coordinate
/// systems, held as the three fundamental brackets
/// {X,Y}, {X,Z}, {Y,Z} (group chart) or {x,y}, {x,z}, {y,z} (local
/// chart, functions polynomial in u = exp(-x), y, z). Arbitrary
/// brackets extend by the Leibniz rule.
class PoissonStructure {
public:
    static PoissonStructure build(const PLParams& P, ChartTag chart) {
        const Poly& a = P.a();
        const Poly& b = P.b();
        const Poly& c = P.c();
        const Poly& d = P.d();
        const Poly& e = P.e();
        const Poly& f = P.f();
        const Rational two(2);

        PoissonStructure S;
        S.chart_ = chart;
        if (chart == ChartTag::group) {
            const Poly X = Poly::variable(vars::X);
            const Poly Y = Poly::variable(vars::Y);
            const Poly Z = Poly::variable(vars::Z);
            S.table_[0] = a * X * X - b * X * Y - two * c * X * Z - a * X;
            S.table_[1] = d * X * X + two * e * X * Y + b * X * Z - d * X;
            S.table_[2] = -(f * X * X) + e * Y * Y + b * Y * Z - d * Y + c * Z * Z + a * Z + f;
        } else {
            const Poly u = Poly::variable(vars::u);
            const Poly y = Poly::variable(vars::y);
            const Poly z = Poly::variable(vars::z);
            const Poly one = Poly::constant(1);
            S.table_[0] = a * (one - u) + b * y + two * c * z;
            S.table_[1] = d * (one - u) - two * e * y - b * z;
            S.table_[2] = f * (one - u * u) + e * y * y + b * y * z - d * y + c * z * z + a * z;
        }
        return S;
    }

    static PoissonStructure from_table(ChartTag chart, Poly b01, Poly b02, Poly b12) {
        PoissonStructure S;
        S.chart_ = chart;
        S.table_ = {std::move(b01), std::move(b02), std::move(b12)};
        return S;
    }

    ChartTag chart() const { return chart_; }

    std::array<Var, 3> coordinates() const {
        if (chart_ == ChartTag::group) return {vars::X, vars::Y, vars::Z};
        return {vars::x, vars::y, vars::z};
    }

    /// Signed fundamental bracket {w_i, w_j} of the chart coordinates.
    Poly fundamental(int i, int j) const {
        if (i == j) return Poly();
        if (i > j) return -fundamental(j, i);
        if (i == 0) return table_[j == 1 ? 0 : 1];
        return table_[2];
    }

    /// Overwrites one fundamental bracket; deliberately corrupted tables
    /// are allowed so negative controls can exercise the verifiers.
    void set_fundamental(int i, int j, Poly p) {
        if (i >= j) throw std::invalid_argument("PoissonStructure: set_fundamental wants i < j");
        table_[i == 0 ? (j == 1 ? 0 : 1) : 2] = std::move(p);
    }

    /// Derivation with respect to the i-th chart coordinate; on the
    /// local chart d/dx carries the u = exp(-x) chain rule.
    Poly derive(int i, const Poly& p) const { return p.partial(coordinates()[static_cast<std::size_t>(i)]); }

    /// Leibniz extension of the fundamental table to Laurent polynomials.
    Poly bracket_poly(const Poly& p, const Poly& q) const {
        check_chart(p);
        check_chart(q);
        Poly acc;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const Poly dpi = derive(i, p);
                const Poly dqj = derive(j, q);
                const Poly dpj = derive(j, p);
                const Poly dqi = derive(i, q);
                acc += fundamental(i, j) * (dpi * dqj - dpj * dqi);
            }
        return acc;
    }

    RationalFunction bracket(const Poly& p, const Poly& q) const {
        return RationalFunction::from_laurent(bracket_poly(p, q),
                                              chart_ == ChartTag::group ? vars::X : vars::u);
    }

private:
    void check_chart(const Poly& p) const {
        for (const Var& v : p.variables()) {
            if (v.factor != 0) continue;
            const bool group_var = v.base == VarBase::X || v.base == VarBase::Y || v.base == VarBase::Z;
            const bool local_var = v.base == VarBase::u || v.base == VarBase::y ||
                                   v.base == VarBase::z || v.base == VarBase::x;
            if ((chart_ == ChartTag::group && local_var) || (chart_ == ChartTag::local && group_var))
                throw std::invalid_argument("PoissonStructure: chart mismatch, variable " + v.name());
        }
    }

    ChartTag chart_{ChartTag::group};
    std::array<Poly, 3> table_;  // {w0,w1}, {w0,w2}, {w1,w2}
};

/// Cyclic Jacobi residual {{w0,w1},w2} + {{w1,w2},w0} + {{w2,w0},w1}
/// over the chart coordinates; the zero polynomial iff the table is a
/// Poisson structure. Brackets with repeated coordinates vanish by
/// antisymmetry, so the one distinct triple is the whole condition in 3D.
inline Poly jacobi_residual(const PoissonStructure& S) {
    const auto w = S.coordinates();
    const Poly w0 = Poly::variable(w[0]);
    const Poly w1 = Poly::variable(w[1]);
    const Poly w2 = Poly::variable(w[2]);
    return S.bracket_poly(S.fundamental(0, 1), w2) + S.bracket_poly(S.fundamental(1, 2), w0) +
           S.bracket_poly(S.fundamental(2, 0), w1);
}

/// The generic Casimir [f(1+X^2) + (X-1)(dY-aZ) + eY^2 + (bY+cZ)Z] / X.
inline RationalFunction casimir(const PLParams& P) {
    const Poly X = Poly::variable(vars::X);
    const Poly Y = Poly::variable(vars::Y);
    const Poly Z = Poly::variable(vars::Z);
    const Poly one = Poly::constant(1);
    const Poly num = P.f() * (one + X * X) + (X - one) * (P.d() * Y - P.a() * Z) + P.e() * Y * Y +
                     (P.b() * Y + P.c() * Z) * Z;
    return RationalFunction::from_laurent(num * Poly::variable(vars::X, -1), vars::X);
}

/// Linear (Lie-Poisson) truncation of a local-chart structure at the
/// group identity, obtained by the exact substitution u -> 1 - x and
/// truncation to total degree one in (x,y,z).
struct LinearBracketTable {
    Poly xy, xz, yz;
};

inline LinearBracketTable linearize(const PoissonStructure& S) {
    if (S.chart() != ChartTag::local)
        throw std::invalid_argument("linearize: structure must be in the local chart");
    const Poly img = Poly::constant(1) - Poly::variable(vars::x);
    const std::array<Var, 3> chart_vars = {vars::x, vars::y, vars::z};
    auto lin = [&](const Poly& p) {
        return p.subst_power(vars::u, [&](std::int32_t n) {
                    if (n < 0) throw std::domain_error("linearize: negative power of u");
                    return img.pow(n);
                })
            .truncate_degree_in(chart_vars, 1);
    };
    return {lin(S.fundamental(0, 1)), lin(S.fundamental(0, 2)), lin(S.fundamental(1, 2))};
}

/// Rewrites a local-chart structure in the group coordinates
/// X = exp(-x) = u, Y = y, Z = z, including the -u Jacobian on brackets
/// against x.
inline PoissonStructure to_group_chart(const PoissonStructure& S) {
    if (S.chart() != ChartTag::local)
        throw std::invalid_argument("to_group_chart: structure must be in the local chart");
    const Poly mu = -Poly::variable(vars::u);
    auto convert = [](Poly p) {
        return p.subst_power(vars::u, [](std::int32_t n) { return Poly::variable(vars::X, n); })
            .rename(vars::y, vars::Y)
            .rename(vars::z, vars::Z);
    };
    return PoissonStructure::from_table(ChartTag::group, convert(mu * S.fundamental(0, 1)),
                                        convert(mu * S.fundamental(0, 2)), convert(S.fundamental(1, 2)));
}

/// Rank of the Poisson tensor at an exact sample point (0 or 2 for an
/// antisymmetric 3x3 matrix). Degenerate strata may admit Casimirs
/// beyond the generic one; this reports the pointwise rank only.
inline int poisson_rank_at(const PoissonStructure& S, const std::map<Var, Rational>& point) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!S.fundamental(i, j).eval(point).is_zero()) return 2;
    return 0;
}

}  // namespace booklie
