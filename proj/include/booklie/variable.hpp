#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace booklie {

/// Base symbols of the global variable universe, in the fixed canonical
/// order used by the graded-lex monomial comparison:
/// structure parameters a..f, r-matrix coefficients, the deformation
/// symbol kappa (= q^b) and its series symbol eta, group coordinates
/// X,Y,Z, local coordinates u = exp(-x), y, z, and x itself.
enum class VarBase : std::uint8_t {
    a, b, c, d, e, f,
    r12, r13, r23,
    kappa, eta,
    X, Y, Z,
    u, y, z, x,
};

inline constexpr int kVarBaseCount = 18;

inline constexpr std::array<const char*, kVarBaseCount> kVarBaseNames = {
    "a", "b", "c", "d", "e", "f",
    "r12", "r13", "r23",
    "kappa", "eta",
    "X", "Y", "Z",
    "u", "y", "z", "x",
};

/// A variable: a base symbol plus an optional tensor-factor suffix.
/// factor 0 is the plain symbol; factor k >= 1 is the k-th tensor copy
/// (X with factor 2 prints as "X2"). Tensor copies sort after every
/// plain symbol, ordered by factor then base.
struct Var {
    VarBase base{VarBase::a};
    std::uint8_t factor{0};

    constexpr int rank() const {
        const int b = static_cast<int>(base);
        return factor == 0 ? b : kVarBaseCount * factor + b;
    }

    /// Only X, u and kappa (and their tensor copies) may carry negative
    /// exponents.
    constexpr bool invertible() const {
        return base == VarBase::X || base == VarBase::u || base == VarBase::kappa;
    }

    std::string name() const {
        std::string s = kVarBaseNames[static_cast<int>(base)];
        if (factor != 0) s += std::to_string(static_cast<int>(factor));
        return s;
    }

    friend constexpr bool operator==(Var lhs, Var rhs) { return lhs.rank() == rhs.rank(); }
    friend constexpr auto operator<=>(Var lhs, Var rhs) { return lhs.rank() <=> rhs.rank(); }
};

constexpr Var tensor_copy(Var v, int k) {
    return Var{v.base, static_cast<std::uint8_t>(k)};
}

namespace vars {
inline constexpr Var a{VarBase::a};
inline constexpr Var b{VarBase::b};
inline constexpr Var c{VarBase::c};
inline constexpr Var d{VarBase::d};
inline constexpr Var e{VarBase::e};
inline constexpr Var f{VarBase::f};
inline constexpr Var r12{VarBase::r12};
inline constexpr Var r13{VarBase::r13};
inline constexpr Var r23{VarBase::r23};
inline constexpr Var kappa{VarBase::kappa};
inline constexpr Var eta{VarBase::eta};
inline constexpr Var X{VarBase::X};
inline constexpr Var Y{VarBase::Y};
inline constexpr Var Z{VarBase::Z};
inline constexpr Var u{VarBase::u};
inline constexpr Var y{VarBase::y};
inline constexpr Var z{VarBase::z};
inline constexpr Var x{VarBase::x};
}  // namespace vars

}  // namespace booklie
