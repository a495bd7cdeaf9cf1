#pragma once

#include <string>

#include "booklie/poly.hpp"

namespace booklie {

/// Polynomial divided by a pure power of one invertible variable,
/// the only denominator shape the bracket algebra produces (X^n on the
/// group chart, u^n on the local chart). Stored normalized: the
/// denominator exponent is minimal.
class RationalFunction {
public:
    RationalFunction() = default;

    static RationalFunction from_laurent(const Poly& p, Var denominator_variable) {
        RationalFunction rf;
        rf.var_ = denominator_variable;
        const std::int32_t m = p.min_exponent(denominator_variable);
        if (m < 0) {
            rf.exp_ = -m;
            rf.num_ = p * Poly::variable(denominator_variable, -m);
        } else {
            rf.num_ = p;
        }
        return rf;
    }

    const Poly& numerator() const { return num_; }
    Var denominator_variable() const { return var_; }
    int denominator_exponent() const { return exp_; }

    Poly as_laurent() const {
        return exp_ == 0 ? num_ : num_ * Poly::variable(var_, -exp_);
    }

    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.as_laurent() == b.as_laurent();
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (exp_ == 0) return num_.str();
        std::string den = var_.name();
        if (exp_ != 1) den += "^" + std::to_string(exp_);
        return "(" + num_.str() + ")/" + den;
    }

private:
    Poly num_;
    Var var_{vars::X};
    int exp_{0};
};

}  // namespace booklie
