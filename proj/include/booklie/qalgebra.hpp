#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "booklie/poly.hpp"

namespace booklie {

namespace qdetail {

/// Net kappa power collected when the normal word X^i2 Y^j2 Z^k2 is
/// moved left through Y^j1 Z^k1:
///   Y X = kappa X Y,  Z X = kappa^-1 X Z,  Z Y = kappa^-1 Y Z.
inline long reorder_kappa_power(long j1, long k1, long i2, long j2) {
    return i2 * j1 - i2 * k1 - j2 * k1;
}

}  // namespace qdetail

/// Element of the quantum book algebra in PBW normal form: a sum of
/// words Xh^i Yh^j Zh^k (i may be negative, Xh is invertible; j, k >= 0)
/// with coefficients that are Laurent polynomials in kappa = q^b.
class NCPoly {
public:
    using Word = std::array<std::int32_t, 3>;

    NCPoly() = default;

    static NCPoly word(Word w, Poly coeff = Poly::constant(1)) {
        NCPoly p;
        if (!coeff.is_zero()) p.terms_.emplace(w, std::move(coeff));
        return p;
    }
    static NCPoly one() { return word({0, 0, 0}); }
    static NCPoly gen_x(std::int32_t e = 1) { return word({e, 0, 0}); }
    static NCPoly gen_y() { return word({0, 1, 0}); }
    static NCPoly gen_z() { return word({0, 0, 1}); }
    static NCPoly kappa_power(std::int32_t n) {
        return word({0, 0, 0}, Poly::variable(vars::kappa, n));
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Poly>& terms() const { return terms_; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPoly& a, const NCPoly& b) { return !(a == b); }

    NCPoly operator-() const {
        NCPoly r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend NCPoly operator+(const NCPoly& a, const NCPoly& b) {
        NCPoly r = a;
        for (const auto& [w, c] : b.terms_) {
            auto [it, fresh] = r.terms_.emplace(w, c);
            if (!fresh) it->second += c;
        }
        r.prune();
        return r;
    }
    friend NCPoly operator-(const NCPoly& a, const NCPoly& b) { return a + (-b); }

    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (const auto& [w1, c1] : a.terms_)
            for (const auto& [w2, c2] : b.terms_) {
                const long kpow = qdetail::reorder_kappa_power(w1[1], w1[2], w2[0], w2[1]);
                const Word w = {w1[0] + w2[0], w1[1] + w2[1], w1[2] + w2[2]};
                Poly coeff = c1 * c2;
                if (kpow != 0)
                    coeff = coeff * Poly::variable(vars::kappa, static_cast<std::int32_t>(kpow));
                auto [it, fresh] = r.terms_.emplace(w, coeff);
                if (!fresh) it->second += coeff;
            }
        r.prune();
        return r;
    }

    friend NCPoly operator*(const Poly& s, const NCPoly& p) {
        NCPoly r = p;
        for (auto& [w, c] : r.terms_) c = s * c;
        r.prune();
        return r;
    }

    static NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

    /// Maps each word to the commutative monomial X^i Y^j Z^k and each
    /// coefficient through the given map; used by the classical limit.
    Poly to_classical(const std::function<Poly(const Poly&)>& coeff_map) const {
        Poly out;
        for (const auto& [w, c] : terms_)
            out += coeff_map(c) * Poly::monomial(Rational(1),
                                                 {{vars::X, w[0]}, {vars::Y, w[1]}, {vars::Z, w[2]}});
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            std::string mono;
            const std::array<const char*, 3> names = {"X", "Y", "Z"};
            for (int i = 0; i < 3; ++i) {
                if (w[static_cast<std::size_t>(i)] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[static_cast<std::size_t>(i)];
                if (w[static_cast<std::size_t>(i)] != 1)
                    mono += "^" + std::to_string(w[static_cast<std::size_t>(i)]);
            }
            if (mono.empty()) mono = "1";
            if (!first) out += " + ";
            out += "(" + c.str() + ")*" + mono;
            first = false;
        }
        return out;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    std::map<Word, Poly> terms_;
};

/// Two-fold tensor square of the quantum algebra: factor-1 letters
/// commute with factor-2 letters, each factor reorders with its own
/// kappa factors.
class NCTensorPoly {
public:
    using Word = std::array<std::int32_t, 6>;  // (i1,j1,k1, i2,j2,k2)

    NCTensorPoly() = default;

    static NCTensorPoly word(Word w, Poly coeff = Poly::constant(1)) {
        NCTensorPoly p;
        if (!coeff.is_zero()) p.terms_.emplace(w, std::move(coeff));
        return p;
    }
    static NCTensorPoly one() { return word({0, 0, 0, 0, 0, 0}); }

    /// g (x) 1 or 1 (x) g for a plain generator word.
    static NCTensorPoly embed(const NCPoly& p, int factor) {
        NCTensorPoly r;
        for (const auto& [w, c] : p.terms()) {
            Word t{};
            for (int i = 0; i < 3; ++i) t[static_cast<std::size_t>(factor == 1 ? i : i + 3)] = w[static_cast<std::size_t>(i)];
            r.terms_.emplace(t, c);
        }
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Poly>& terms() const { return terms_; }

    friend bool operator==(const NCTensorPoly& a, const NCTensorPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCTensorPoly& a, const NCTensorPoly& b) { return !(a == b); }

    NCTensorPoly operator-() const {
        NCTensorPoly r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }

    friend NCTensorPoly operator+(const NCTensorPoly& a, const NCTensorPoly& b) {
        NCTensorPoly r = a;
        for (const auto& [w, c] : b.terms_) {
            auto [it, fresh] = r.terms_.emplace(w, c);
            if (!fresh) it->second += c;
        }
        r.prune();
        return r;
    }
    friend NCTensorPoly operator-(const NCTensorPoly& a, const NCTensorPoly& b) { return a + (-b); }

    friend NCTensorPoly operator*(const NCTensorPoly& a, const NCTensorPoly& b) {
        NCTensorPoly r;
        for (const auto& [w1, c1] : a.terms_)
            for (const auto& [w2, c2] : b.terms_) {
                const long kpow = qdetail::reorder_kappa_power(w1[1], w1[2], w2[0], w2[1]) +
                                  qdetail::reorder_kappa_power(w1[4], w1[5], w2[3], w2[4]);
                Word w{};
                for (std::size_t i = 0; i < 6; ++i) w[i] = w1[i] + w2[i];
                Poly coeff = c1 * c2;
                if (kpow != 0)
                    coeff = coeff * Poly::variable(vars::kappa, static_cast<std::int32_t>(kpow));
                auto [it, fresh] = r.terms_.emplace(w, coeff);
                if (!fresh) it->second += coeff;
            }
        r.prune();
        return r;
    }

    friend NCTensorPoly operator*(const Poly& s, const NCTensorPoly& p) {
        NCTensorPoly r = p;
        for (auto& [w, c] : r.terms_) c = s * c;
        r.prune();
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            static const std::array<const char*, 6> names = {"X1", "Y1", "Z1", "X2", "Y2", "Z2"};
            std::string mono;
            for (std::size_t i = 0; i < 6; ++i) {
                if (w[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (w[i] != 1) mono += "^" + std::to_string(w[i]);
            }
            if (mono.empty()) mono = "1";
            if (!first) out += " + ";
            out += "(" + c.str() + ")*" + mono;
            first = false;
        }
        return out;
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    std::map<Word, Poly> terms_;
};

// ---------------------------------------------------------------------
// Letter-level rewriting, for the confluence checks.

enum class QLetter : std::uint8_t { X, Xinv, Y, Z };

/// A word in the free monoid on {X, X^-1, Y, Z} with a kappa-power
/// coefficient, reduced step by step toward the PBW normal order.
struct QWord {
    long kexp{0};
    std::vector<QLetter> letters;
};

namespace qdetail {

struct Rule {
    long dk;                       // kappa exponent picked up
    bool cancel;                   // X X^-1 / X^-1 X pair disappears
    std::array<QLetter, 2> image;  // swapped pair when !cancel
};

inline bool rule_at(const QWord& w, std::size_t pos, Rule& out) {
    const QLetter a = w.letters[pos], b = w.letters[pos + 1];
    if ((a == QLetter::X && b == QLetter::Xinv) || (a == QLetter::Xinv && b == QLetter::X)) {
        out = {0, true, {}};
        return true;
    }
    if (a == QLetter::Y && b == QLetter::X) {
        out = {+1, false, {QLetter::X, QLetter::Y}};
        return true;
    }
    if (a == QLetter::Y && b == QLetter::Xinv) {
        out = {-1, false, {QLetter::Xinv, QLetter::Y}};
        return true;
    }
    if (a == QLetter::Z && b == QLetter::X) {
        out = {-1, false, {QLetter::X, QLetter::Z}};
        return true;
    }
    if (a == QLetter::Z && b == QLetter::Xinv) {
        out = {+1, false, {QLetter::Xinv, QLetter::Z}};
        return true;
    }
    if (a == QLetter::Z && b == QLetter::Y) {
        out = {-1, false, {QLetter::Y, QLetter::Z}};
        return true;
    }
    return false;
}

}  // namespace qdetail

/// Positions where a rewrite applies; empty iff the word is normal.
inline std::vector<std::size_t> redex_positions(const QWord& w) {
    std::vector<std::size_t> out;
    if (w.letters.size() < 2) return out;
    qdetail::Rule r;
    for (std::size_t pos = 0; pos + 1 < w.letters.size(); ++pos)
        if (qdetail::rule_at(w, pos, r)) out.push_back(pos);
    return out;
}

inline QWord rewrite_at(QWord w, std::size_t pos) {
    qdetail::Rule r;
    if (!qdetail::rule_at(w, pos, r)) throw std::invalid_argument("rewrite_at: no redex at position");
    w.kexp += r.dk;
    if (r.cancel) {
        w.letters.erase(w.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                        w.letters.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    } else {
        w.letters[pos] = r.image[0];
        w.letters[pos + 1] = r.image[1];
    }
    return w;
}

/// Fully reduces a letter word, choosing the redex with the supplied
/// strategy (index into the current redex list). Returns the PBW form.
inline NCPoly normal_form_letters(const std::vector<QLetter>& letters,
                                  const std::function<std::size_t(std::size_t)>& choose) {
    QWord w{0, letters};
    for (;;) {
        const auto redexes = redex_positions(w);
        if (redexes.empty()) break;
        w = rewrite_at(w, redexes[choose(redexes.size()) % redexes.size()]);
    }
    NCPoly::Word word{};
    for (const QLetter l : w.letters) {
        if (l == QLetter::X) ++word[0];
        if (l == QLetter::Xinv) --word[0];
        if (l == QLetter::Y) ++word[1];
        if (l == QLetter::Z) ++word[2];
    }
    return NCPoly::word(word, Poly::variable(vars::kappa, static_cast<std::int32_t>(w.kexp)));
}

/// The same word folded through NCPoly multiplication, as the second
/// route for the confluence checks.
inline NCPoly normal_form_product(const std::vector<QLetter>& letters) {
    NCPoly acc = NCPoly::one();
    for (const QLetter l : letters) {
        switch (l) {
            case QLetter::X: acc = acc * NCPoly::gen_x(); break;
            case QLetter::Xinv: acc = acc * NCPoly::gen_x(-1); break;
            case QLetter::Y: acc = acc * NCPoly::gen_y(); break;
            case QLetter::Z: acc = acc * NCPoly::gen_z(); break;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------
// Quantum coproduct and the algebra identities.

/// Delta(Xh) = Xh (x) Xh, Delta(Yh) = Xh (x) Yh + Yh (x) 1,
/// Delta(Zh) = Xh (x) Zh + Zh (x) 1.
inline NCTensorPoly q_coproduct_x(std::int32_t e = 1) {
    return NCTensorPoly::word({e, 0, 0, e, 0, 0});
}
inline NCTensorPoly q_coproduct_y() {
    return NCTensorPoly::word({1, 0, 0, 0, 1, 0}) + NCTensorPoly::word({0, 1, 0, 0, 0, 0});
}
inline NCTensorPoly q_coproduct_z() {
    return NCTensorPoly::word({1, 0, 0, 0, 0, 1}) + NCTensorPoly::word({0, 0, 1, 0, 0, 0});
}

/// The defining relations evaluated on coproduct images:
///   Delta(X)Delta(Y) - kappa^-1 Delta(Y)Delta(X),
///   Delta(X)Delta(Z) - kappa   Delta(Z)Delta(X),
///   Delta(Y)Delta(Z) - kappa   Delta(Z)Delta(Y).
/// All three vanish identically in kappa.
inline std::array<NCTensorPoly, 3> q_homomorphism_residual(
    const NCTensorPoly* corrupted_delta_y = nullptr) {
    const NCTensorPoly dx = q_coproduct_x();
    const NCTensorPoly dy = corrupted_delta_y ? *corrupted_delta_y : q_coproduct_y();
    const NCTensorPoly dz = q_coproduct_z();
    const Poly kp = Poly::variable(vars::kappa);
    const Poly km = Poly::variable(vars::kappa, -1);
    return {dx * dy - km * (dy * dx), dx * dz - kp * (dz * dx), dy * dz - kp * (dz * dy)};
}

/// Commutators of the quantum Casimir Ch = Xh^-1 Yh Zh with the three
/// generators; all zero.
inline std::array<NCPoly, 3> q_casimir_centrality() {
    const NCPoly C = NCPoly::word({-1, 1, 1});
    return {NCPoly::commutator(C, NCPoly::gen_x()), NCPoly::commutator(C, NCPoly::gen_y()),
            NCPoly::commutator(C, NCPoly::gen_z())};
}

/// Covariance of the quantum plane yz = kappa zy under the left
/// coaction, run for both arrangements of the quantum matrix:
///   qgroup ordering:  y' = X (x) y + Z (x) 1,  z' = X (x) z + Y (x) 1
///   classical order:  y' = X (x) y + Y (x) 1,  z' = X (x) z + Z (x) 1
/// Factor 1 carries the algebra relations, factor 2 the plane relation
/// (encoded in the same reordering engine: plane letters behave like
/// Yh, Zh of a second copy).
struct CoactionReport {
    NCTensorPoly residual_qgroup;
    NCTensorPoly residual_classical;
    bool qgroup_passes{false};
    bool classical_passes{false};
};

inline CoactionReport coaction_covariance() {
    const Poly kp = Poly::variable(vars::kappa);
    const auto X1y2 = NCTensorPoly::word({1, 0, 0, 0, 1, 0});
    const auto X1z2 = NCTensorPoly::word({1, 0, 0, 0, 0, 1});
    const auto Y1 = NCTensorPoly::word({0, 1, 0, 0, 0, 0});
    const auto Z1 = NCTensorPoly::word({0, 0, 1, 0, 0, 0});

    auto residual = [&](const NCTensorPoly& yp, const NCTensorPoly& zp) {
        return yp * zp - kp * (zp * yp);
    };

    CoactionReport rep;
    rep.residual_qgroup = residual(X1y2 + Z1, X1z2 + Y1);
    rep.residual_classical = residual(X1y2 + Y1, X1z2 + Z1);
    rep.qgroup_passes = rep.residual_qgroup.is_zero();
    rep.classical_passes = rep.residual_classical.is_zero();
    return rep;
}

/// First-order classical limit: kappa^n -> 1 + n b eta (eta^2 = 0), the
/// eta-coefficient of each generator commutator mapped back to the
/// commutative coordinates. Reproduces {X,Y} = -bXY, {X,Z} = bXZ,
/// {Y,Z} = bYZ.
struct ClassicalLimit {
    Poly xy, xz, yz;
};

inline ClassicalLimit classical_limit_check() {
    const auto first_order = [](const Poly& coeff) {
        const Poly expanded = coeff.subst_power(vars::kappa, [](std::int32_t n) {
            return Poly::constant(1) +
                   Rational(n) * Poly::variable(vars::b) * Poly::variable(vars::eta);
        });
        return expanded.coeff_of(vars::eta, 1);
    };
    auto limit_bracket = [&](const NCPoly& u, const NCPoly& v) {
        return NCPoly::commutator(u, v).to_classical(first_order);
    };
    return {limit_bracket(NCPoly::gen_x(), NCPoly::gen_y()),
            limit_bracket(NCPoly::gen_x(), NCPoly::gen_z()),
            limit_bracket(NCPoly::gen_y(), NCPoly::gen_z())};
}

}  // namespace booklie
