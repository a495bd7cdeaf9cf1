#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "booklie/poisson.hpp"
#include "booklie/poly.hpp"

namespace booklie {

namespace detail {

inline bool is_group_coordinate(Var v) {
    return v.base == VarBase::X || v.base == VarBase::Y || v.base == VarBase::Z;
}

}  // namespace detail

/// Renames the group coordinates of p into tensor factor k (X -> Xk and
/// so on); every other variable passes through as a scalar coefficient.
inline Poly embed_factor(const Poly& p, int k) {
    return p.subst_all([k](Var v) -> std::optional<Poly> {
        if (detail::is_group_coordinate(v) && v.factor == 0)
            return Poly::variable(tensor_copy(v, k));
        return std::nullopt;
    });
}

/// Applies the coproduct to tensor factor k of an n-factor element:
/// factor k spreads over factors (k, k+1) via
///   X_k -> X_k X_{k+1},  Y_k -> X_k Y_{k+1} + Y_k,  Z_k -> X_k Z_{k+1} + Z_k,
/// and every factor above k shifts up by one.
inline Poly apply_coproduct_at(const Poly& p, int k) {
    return p.subst_all([k](Var v) -> std::optional<Poly> {
        if (!detail::is_group_coordinate(v) || v.factor == 0) return std::nullopt;
        if (v.factor > k) return Poly::variable(tensor_copy(v, v.factor + 1));
        if (v.factor < k) return std::nullopt;
        const Var head = tensor_copy(Var{v.base, 0}, k);
        const Var tail = tensor_copy(Var{v.base, 0}, k + 1);
        const Var xk = tensor_copy(vars::X, k);
        if (v.base == VarBase::X) return Poly::variable(xk) * Poly::variable(tensor_copy(vars::X, k + 1));
        return Poly::variable(xk) * Poly::variable(tail) + Poly::variable(head);
    });
}

/// Pullback of the group multiplication on coordinate functions:
/// Delta(X) = X1 X2, Delta(Y) = X1 Y2 + Y1, Delta(Z) = X1 Z2 + Z1,
/// extended as an algebra homomorphism (X^-1 -> X1^-1 X2^-1).
inline Poly coproduct(const Poly& p) { return apply_coproduct_at(embed_factor(p, 1), 1); }

/// Left-nested iterated coproduct on N tensor factors
/// (Delta (x) id^(N-2)) o ... o Delta; N = 2 is coproduct itself.
inline Poly iterated_coproduct(const Poly& p, int n) {
    if (n < 2) throw std::invalid_argument("iterated_coproduct: need N >= 2");
    Poly t = coproduct(p);
    for (int m = 3; m <= n; ++m) t = apply_coproduct_at(t, 1);
    return t;
}

/// Right-nested variant (id^(N-2) (x) Delta) o ...; by coassociativity
/// it agrees with the left-nested one.
inline Poly iterated_coproduct_right(const Poly& p, int n) {
    if (n < 2) throw std::invalid_argument("iterated_coproduct_right: need N >= 2");
    Poly t = coproduct(p);
    for (int m = 3; m <= n; ++m) t = apply_coproduct_at(t, m - 1);
    return t;
}

/// Product Poisson structure on the n-fold tensor algebra: factor-k
/// variables bracket with factor-k variables through S, cross-factor
/// brackets vanish.
inline Poly tensor_bracket(const PoissonStructure& S, const Poly& P, const Poly& Q, int nfactors = 2) {
    if (S.chart() != ChartTag::group)
        throw std::invalid_argument("tensor_bracket: group-chart structure required");
    Poly acc;
    for (int k = 1; k <= nfactors; ++k) {
        const std::array<Var, 3> w = {tensor_copy(vars::X, k), tensor_copy(vars::Y, k),
                                      tensor_copy(vars::Z, k)};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const Poly bij = embed_factor(S.fundamental(i, j), k);
                acc += bij * (P.partial(w[static_cast<std::size_t>(i)]) * Q.partial(w[static_cast<std::size_t>(j)]) -
                              P.partial(w[static_cast<std::size_t>(j)]) * Q.partial(w[static_cast<std::size_t>(i)]));
            }
    }
    return acc;
}

/// Residuals {Delta(w_i), Delta(w_j)} - Delta({w_i,w_j}) for the three
/// generator pairs; all zero iff the coproduct is a Poisson map for S.
inline std::array<Poly, 3> poisson_map_residual(const PoissonStructure& S) {
    const std::array<Poly, 3> gen = {Poly::variable(vars::X), Poly::variable(vars::Y),
                                     Poly::variable(vars::Z)};
    std::array<Poly, 3> res;
    int slot = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            res[static_cast<std::size_t>(slot++)] =
                tensor_bracket(S, coproduct(gen[static_cast<std::size_t>(i)]),
                               coproduct(gen[static_cast<std::size_t>(j)])) -
                coproduct(S.fundamental(i, j));
    return res;
}

inline std::array<Poly, 3> poisson_map_residual(const PLParams& P) {
    return poisson_map_residual(PoissonStructure::build(P, ChartTag::group));
}

/// (Delta (x) id) o Delta - (id (x) Delta) o Delta on each generator,
/// over the tripled variable set; exactly zero.
inline std::array<Poly, 3> coassociativity_residual() {
    std::array<Poly, 3> res;
    const std::array<Var, 3> w = {vars::X, vars::Y, vars::Z};
    for (int i = 0; i < 3; ++i) {
        const Poly d = coproduct(Poly::variable(w[static_cast<std::size_t>(i)]));
        res[static_cast<std::size_t>(i)] = apply_coproduct_at(d, 1) - apply_coproduct_at(d, 2);
    }
    return res;
}

/// Counit: evaluation at the group identity X = 1, Y = Z = 0, carried
/// out by substitution so symbolic coefficients survive.
inline Poly counit_poly(const Poly& p) {
    return p.subst_power(vars::X, [](std::int32_t) { return Poly::constant(1); })
        .subst(vars::Y, Poly())
        .subst(vars::Z, Poly());
}

inline Rational counit(const Poly& p) { return counit_poly(p).constant_value(); }

/// Antipode: pullback of matrix inversion, S(X) = X^-1, S(Y) = -Y X^-1,
/// S(Z) = -Z X^-1, extended as an algebra homomorphism on the
/// commutative function algebra.
inline Poly antipode(const Poly& p) {
    const Poly xinv = Poly::variable(vars::X, -1);
    return p.subst_all([&](Var v) -> std::optional<Poly> {
        if (v.factor != 0) return std::nullopt;
        if (v.base == VarBase::X) return xinv;
        if (v.base == VarBase::Y) return -(Poly::variable(vars::Y) * xinv);
        if (v.base == VarBase::Z) return -(Poly::variable(vars::Z) * xinv);
        return std::nullopt;
    });
}

/// Multiplies the two tensor factors back into the plain algebra
/// (m: a (x) b -> ab), optionally mapping factor 1 through the antipode
/// first. Used for the Hopf axiom m o (S (x) id) o Delta = eta o eps.
inline Poly antipode_axiom_residual(const Poly& p) {
    const Poly d = coproduct(p);
    const Poly folded = d.subst_all([](Var v) -> std::optional<Poly> {
        if (v.factor == 1) return antipode(Poly::variable(Var{v.base, 0}));
        if (v.factor == 2) return Poly::variable(Var{v.base, 0});
        return std::nullopt;
    });
    return folded - counit_poly(p);
}

}  // namespace booklie
