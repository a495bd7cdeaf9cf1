#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "booklie/poisson.hpp"
#include "booklie/poly.hpp"
#include "booklie/poly_matrix.hpp"

namespace booklie {

/// A 3D real Lie algebra given by its structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k.
struct LieAlgebra3 {
    std::array<std::array<std::array<Rational, 3>, 3>, 3> c{};

    /// The book algebra r_3(1): [e1,e3] = e1, [e2,e3] = e2, [e1,e2] = 0.
    static LieAlgebra3 book() {
        LieAlgebra3 g;
        g.set_bracket(0, 2, {Rational(1), Rational(0), Rational(0)});
        g.set_bracket(1, 2, {Rational(0), Rational(1), Rational(0)});
        return g;
    }

    void set_bracket(int i, int j, const std::array<Rational, 3>& coeffs) {
        for (int k = 0; k < 3; ++k) {
            c[i][j][k] = coeffs[k];
            c[j][i][k] = -coeffs[k];
        }
    }

    bool antisymmetric() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    if (c[i][j][k] != -c[j][i][k]) return false;
        return true;
    }

    /// Max-norm witness of the Jacobi identity on structure constants:
    /// all components of [[e_i,e_j],e_k] + cyclic.
    bool jacobi_holds() const {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int m = 0; m < 3; ++m) {
                        Rational s(0);
                        for (int l = 0; l < 3; ++l)
                            s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
                        if (!s.is_zero()) return false;
                    }
        return true;
    }

    Rational trace_ad(int i) const {
        Rational t(0);
        for (int k = 0; k < 3; ++k) t += c[i][k][k];
        return t;
    }

    std::array<std::array<Rational, 3>, 3> killing_form() const {
        std::array<std::array<Rational, 3>, 3> K{};
        // K(e_i,e_j) = tr(ad e_i ad e_j), (ad e_i)_{mk} = c[i][k][m]
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Rational s(0);
                for (int m = 0; m < 3; ++m)
                    for (int k = 0; k < 3; ++k) s += c[i][k][m] * c[j][m][k];
                K[i][j] = s;
            }
        return K;
    }

    Rational killing_det() const {
        const auto K = killing_form();
        Rational det(0);
        det += K[0][0] * (K[1][1] * K[2][2] - K[1][2] * K[2][1]);
        det -= K[0][1] * (K[1][0] * K[2][2] - K[1][2] * K[2][0]);
        det += K[0][2] * (K[1][0] * K[2][1] - K[1][1] * K[2][0]);
        return det;
    }
};

/// Skew bivector r = r12 e1^e2 + r13 e1^e3 + r23 e2^e3; components may
/// be numeric or the formal symbols r12, r13, r23.
struct SkewBivector {
    Poly r12, r13, r23;

    static SkewBivector symbolic() {
        return {Poly::variable(vars::r12), Poly::variable(vars::r13), Poly::variable(vars::r23)};
    }

    static SkewBivector numeric(const Rational& v12, const Rational& v13, const Rational& v23) {
        return {Poly::constant(v12), Poly::constant(v13), Poly::constant(v23)};
    }

    /// Full antisymmetric component r^{ij}.
    Poly comp(int i, int j) const {
        if (i == j) return Poly();
        if (i > j) return -comp(j, i);
        if (i == 0) return j == 1 ? r12 : r13;
        return r23;
    }
};

/// One-dimensional Lambda^3 coefficient (of e1^e2^e3).
struct Trivector {
    Poly coeff;
};

/// Schouten bracket [[r,r]] via structure-constant contraction,
/// returned as the Lambda^3 coefficient after full antisymmetrization.
inline Trivector schouten_bracket(const SkewBivector& r, const LieAlgebra3& g) {
    auto component = [&](int i, int j, int k) {
        // [r12,r13] + [r12,r23] + [r13,r23] at slot (i,j,k)
        Poly s;
        for (int l = 0; l < 3; ++l)
            for (int m = 0; m < 3; ++m) {
                if (!g.c[l][m][i].is_zero()) s += r.comp(l, j) * r.comp(m, k) * g.c[l][m][i];
                if (!g.c[l][m][j].is_zero()) s += r.comp(i, l) * r.comp(m, k) * g.c[l][m][j];
                if (!g.c[l][m][k].is_zero()) s += r.comp(i, l) * r.comp(j, m) * g.c[l][m][k];
            }
        return s;
    };
    static constexpr int perms[6][4] = {{0, 1, 2, +1}, {1, 2, 0, +1}, {2, 0, 1, +1},
                                        {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
    Poly total;
    for (const auto& p : perms) {
        const Poly comp = component(p[0], p[1], p[2]);
        total += p[3] > 0 ? comp : -comp;
    }
    return {total * Rational(1, 6)};
}

/// Adjoint action of each generator on a trivector; on Lambda^3 the
/// generator e_i acts by tr(ad e_i), so the residual list is
/// (tr(ad e_i) * t)_i. Zero iff t is ad-invariant (the mCYBE).
inline std::array<Poly, 3> mcybe_residual(const Trivector& t, const LieAlgebra3& g) {
    std::array<Poly, 3> res;
    for (int i = 0; i < 3; ++i) res[static_cast<std::size_t>(i)] = t.coeff * g.trace_ad(i);
    return res;
}

/// Sklyanin bracket {f,g} = r^{ab} (L_a f L_b g - R_a f R_b g) on the
/// local chart, with the invariant fields of the book group
///   L_y = u d_y, L_z = u d_z, L_x = d_x,
///   R_y = d_y,   R_z = d_z,   R_x = d_x - y d_y - z d_z.
inline PoissonStructure sklyanin_bracket(const SkewBivector& r) {
    using Field = std::vector<std::pair<Poly, Var>>;
    const Poly u = Poly::variable(vars::u);
    const Poly one = Poly::constant(1);
    const std::array<Field, 3> L = {Field{{u, vars::y}}, Field{{u, vars::z}}, Field{{one, vars::x}}};
    const std::array<Field, 3> R = {
        Field{{one, vars::y}}, Field{{one, vars::z}},
        Field{{one, vars::x}, {-Poly::variable(vars::y), vars::y}, {-Poly::variable(vars::z), vars::z}}};

    auto apply = [](const Field& X, const Poly& p) {
        Poly out;
        for (const auto& [coeff, v] : X) out += coeff * p.partial(v);
        return out;
    };
    auto bracket = [&](const Poly& p, const Poly& q) {
        Poly acc;
        for (int al = 0; al < 3; ++al)
            for (int be = 0; be < 3; ++be) {
                const Poly rab = r.comp(al, be);
                if (rab.is_zero()) continue;
                acc += rab * (apply(L[static_cast<std::size_t>(al)], p) * apply(L[static_cast<std::size_t>(be)], q) -
                              apply(R[static_cast<std::size_t>(al)], p) * apply(R[static_cast<std::size_t>(be)], q));
            }
        return acc;
    };

    const Poly x = Poly::variable(vars::x);
    const Poly y = Poly::variable(vars::y);
    const Poly z = Poly::variable(vars::z);
    return PoissonStructure::from_table(ChartTag::local, bracket(x, y), bracket(x, z), bracket(y, z));
}

/// Coboundary identification: the Sklyanin bracket of r equals the
/// family member with a = r13, b = 0, c = 0, d = r23, e = 0, f = -r12.
inline PLParams coboundary_params(const SkewBivector& r) {
    PLParams P = PLParams::zero();
    P.v[0] = r.r13;
    P.v[3] = r.r23;
    P.v[5] = -r.r12;
    return P;
}

/// The 9x9 classical r-hat matrix of the full six-parameter family,
/// entries linear in a..f.
inline PolyMatrix rhat_matrix(const PLParams& P) {
    const Poly& a = P.a();
    const Poly& b = P.b();
    const Poly& c = P.c();
    const Poly& d = P.d();
    const Poly& e = P.e();
    const Poly& f = P.f();
    const Poly z;
    const Rational two(2);
    const std::array<std::array<Poly, 9>, 9> rows = {{
        {z, -(two * e), d, two * e, z, z, -d, z, z},
        {c, b, a, z, e, z, z, -d, f},
        {z, z, z, z, z, e, z, -e, z},
        {-c, b, z, -(two * b), -e, d, -a, z, -f},
        {z, -(two * c), z, two * c, z, a, z, -a, z},
        {z, z, -c, z, z, -b, c, b, z},
        {z, z, b, z, z, e, -b, -e, z},
        {z, z, -c, z, z, z, c, z, z},
        {z, z, z, z, z, z, z, z, z},
    }};
    PolyMatrix m(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j) m.at(i, j) = rows[i][j];
    return m;
}

/// Group element in the arrangement the r-hat identity uses: the second
/// translation coordinate sits in the top slot,
///   [[X,0,Z],[0,X,Y],[0,0,1]].
/// With the (Y,Z) arrangement of group_matrix_yz() the same identity
/// holds for the shuffle-conjugated matrix instead; the two conventions
/// differ by the e1<->e2 relabeling.
inline PolyMatrix group_matrix_zy() {
    PolyMatrix m(3, 3);
    m.at(0, 0) = Poly::variable(vars::X);
    m.at(0, 2) = Poly::variable(vars::Z);
    m.at(1, 1) = Poly::variable(vars::X);
    m.at(1, 2) = Poly::variable(vars::Y);
    m.at(2, 2) = Poly::constant(1);
    return m;
}

/// Group element with translation coordinates in the (Y, Z) order.
inline PolyMatrix group_matrix_yz() {
    PolyMatrix m(3, 3);
    m.at(0, 0) = Poly::variable(vars::X);
    m.at(0, 2) = Poly::variable(vars::Y);
    m.at(1, 1) = Poly::variable(vars::X);
    m.at(1, 2) = Poly::variable(vars::Z);
    m.at(2, 2) = Poly::constant(1);
    return m;
}

/// Entry-wise bracket matrix {M (x), M}: the bracket {M_ij, M_kl} sits
/// at Kronecker position ((i,k),(j,l)).
inline PolyMatrix bracket_tensor_matrix(const PoissonStructure& S, const PolyMatrix& M) {
    const std::size_t n = M.rows();
    PolyMatrix out(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out.at(i * n + k, j * n + l) = S.bracket_poly(M.at(i, j), M.at(k, l));
    return out;
}

/// {M (x), M} - [M (x) M, r-hat]; the zero matrix for every parameter
/// choice. An optional replacement r-hat supports corrupted controls.
inline PolyMatrix rhat_form_residual(const PLParams& P, const PolyMatrix* rhat_override = nullptr) {
    const PoissonStructure S = PoissonStructure::build(P, ChartTag::group);
    const PolyMatrix M = group_matrix_zy();
    const PolyMatrix MM = PolyMatrix::kron(M, M);
    const PolyMatrix r = rhat_override ? *rhat_override : rhat_matrix(P);
    return bracket_tensor_matrix(S, M) - PolyMatrix::commutator(MM, r);
}

namespace detail {

/// Pads a 9x9 two-site operator to 27x27 acting on sites (s,t) of a
/// three-site space, identity elsewhere. Site indices: 0,1,2.
inline PolyMatrix pad_two_site(const PolyMatrix& op, int s, int t) {
    PolyMatrix out(27, 27);
    const auto idx = [](int p, int q, int r) { return (p * 3 + q) * 3 + r; };
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            for (int r = 0; r < 3; ++r)
                for (int pp = 0; pp < 3; ++pp)
                    for (int qq = 0; qq < 3; ++qq)
                        for (int rr = 0; rr < 3; ++rr) {
                            const int row_site[3] = {p, q, r};
                            const int col_site[3] = {pp, qq, rr};
                            bool ok = true;
                            for (int site = 0; site < 3; ++site)
                                if (site != s && site != t && row_site[site] != col_site[site]) ok = false;
                            if (!ok) continue;
                            const Poly& entry = op.at(static_cast<std::size_t>(row_site[s] * 3 + row_site[t]),
                                                      static_cast<std::size_t>(col_site[s] * 3 + col_site[t]));
                            if (entry.is_zero()) continue;
                            out.at(static_cast<std::size_t>(idx(p, q, r)),
                                   static_cast<std::size_t>(idx(pp, qq, rr))) = entry;
                        }
    return out;
}

}  // namespace detail

/// Classical Yang-Baxter residual
/// [r12,r13] + [r12,r23] + [r13,r23] on the 27x27 padding of r-hat;
/// vanishes exactly when b = c = e = 0.
inline PolyMatrix cybe_residual(const PLParams& P) {
    const PolyMatrix r = rhat_matrix(P);
    const PolyMatrix r12 = detail::pad_two_site(r, 0, 1);
    const PolyMatrix r13 = detail::pad_two_site(r, 0, 2);
    const PolyMatrix r23 = detail::pad_two_site(r, 1, 2);
    return PolyMatrix::commutator(r12, r13) + PolyMatrix::commutator(r12, r23) +
           PolyMatrix::commutator(r13, r23);
}

/// Quantum Yang-Baxter residual R12 R13 R23 - R23 R13 R12 for
/// R = 1 + r-hat on the coboundary stratum; only the a, d, f entries of
/// the parameters enter (b, c, e are dropped: R carries a, d, f only).
inline PolyMatrix qybe_residual(const PLParams& P) {
    PLParams Q = P;
    Q.v[1] = Poly();
    Q.v[2] = Poly();
    Q.v[4] = Poly();
    const PolyMatrix R = PolyMatrix::identity(9) + rhat_matrix(Q);
    const PolyMatrix R12 = detail::pad_two_site(R, 0, 1);
    const PolyMatrix R13 = detail::pad_two_site(R, 0, 2);
    const PolyMatrix R23 = detail::pad_two_site(R, 1, 2);
    return R12 * R13 * R23 - R23 * R13 * R12;
}

/// Adjoint representation of the book algebra.
inline PolyMatrix adjoint_rep(int i) {
    PolyMatrix m(3, 3);
    if (i == 0) m.at(0, 2) = Poly::constant(1);
    if (i == 1) m.at(1, 2) = Poly::constant(1);
    if (i == 2) {
        m.at(0, 0) = Poly::constant(-1);
        m.at(1, 1) = Poly::constant(-1);
    }
    return m;
}

/// r in the fundamental (adjoint) representation:
/// sum r^{ab} (rho_a (x) rho_b - rho_b (x) rho_a) over a < b.
inline PolyMatrix fundamental_bivector(const SkewBivector& r) {
    PolyMatrix out(9, 9);
    for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
            const Poly coeff = r.comp(a, b);
            if (coeff.is_zero()) continue;
            out = out + coeff * (PolyMatrix::kron(adjoint_rep(a), adjoint_rep(b)) -
                                 PolyMatrix::kron(adjoint_rep(b), adjoint_rep(a)));
        }
    return out;
}

/// The e1<->e2 relabeling on bivectors: (r12, r13, r23) -> (-r12, r23, r13).
/// The r-hat matrix restricted to b = c = e = 0 represents the swapped
/// bivector in the fundamental representation, consistently with the
/// (Z, Y) arrangement of the r-hat identity.
inline SkewBivector swap_e1_e2(const SkewBivector& r) { return {-r.r12, r.r23, r.r13}; }

}  // namespace booklie
