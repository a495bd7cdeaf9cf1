#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "booklie/rational.hpp"
#include "booklie/variable.hpp"

namespace booklie {

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// A Poly owns an ordered list of the variables it actually uses plus a
/// term map from exponent vectors to coefficients. The term map is kept
/// in graded-lex order (leading monomial first) over the global variable
/// order, no stored coefficient is zero, and unused variable columns are
/// dropped, so structural equality is semantic equality. Negative
/// exponents are admitted only for variables flagged invertible
/// (X, u, kappa and their tensor copies).
class Poly {
public:
    using Exponents = std::vector<std::int32_t>;

    struct MonoGreater {
        bool operator()(const Exponents& lhs, const Exponents& rhs) const {
            const long dl = std::accumulate(lhs.begin(), lhs.end(), 0L);
            const long dr = std::accumulate(rhs.begin(), rhs.end(), 0L);
            if (dl != dr) return dl > dr;
            for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i)
                if (lhs[i] != rhs[i]) return lhs[i] > rhs[i];
            return lhs.size() > rhs.size();
        }
    };

    using TermMap = std::map<Exponents, Rational, MonoGreater>;

    Poly() = default;

    static Poly constant(Rational c) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(Exponents{}, std::move(c));
        return p;
    }
    static Poly constant(long c) { return constant(Rational(c)); }

    static Poly variable(Var v, std::int32_t exp = 1) {
        return monomial(Rational(1), {{v, exp}});
    }

    static Poly monomial(Rational coeff, std::vector<std::pair<Var, std::int32_t>> factors) {
        Poly p;
        if (coeff.is_zero()) return p;
        std::sort(factors.begin(), factors.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        Exponents key;
        for (const auto& [v, e] : factors) {
            if (e == 0) continue;
            if (e < 0 && !v.invertible())
                throw std::domain_error("Poly: negative exponent on non-invertible variable " + v.name());
            if (!p.vars_.empty() && p.vars_.back() == v) {
                key.back() += e;  // repeated factor
                if (key.back() == 0) {
                    p.vars_.pop_back();
                    key.pop_back();
                }
                continue;
            }
            p.vars_.push_back(v);
            key.push_back(e);
        }
        p.terms_.emplace(std::move(key), std::move(coeff));
        p.normalize();
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && vars_.empty()); }
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::invalid_argument("Poly: not a constant");
        return terms_.begin()->second;
    }

    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Var>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    friend bool operator==(const Poly& lhs, const Poly& rhs) {
        return lhs.vars_ == rhs.vars_ && lhs.terms_ == rhs.terms_;
    }
    friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(const Poly& lhs, const Poly& rhs) {
        auto target = merge_vars(lhs.vars_, rhs.vars_);
        TermMap acc = lhs.remapped(target);
        for (auto& [k, c] : rhs.remapped(target)) {
            auto [it, fresh] = acc.emplace(k, c);
            if (!fresh) it->second += c;
        }
        return assemble(std::move(target), std::move(acc));
    }

    friend Poly operator-(const Poly& lhs, const Poly& rhs) { return lhs + (-rhs); }

    friend Poly operator*(const Poly& lhs, const Poly& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return Poly();
        auto target = merge_vars(lhs.vars_, rhs.vars_);
        const TermMap a = lhs.remapped(target);
        const TermMap b = rhs.remapped(target);
        TermMap acc;
        Exponents key(target.size());
        for (const auto& [ka, ca] : a)
            for (const auto& [kb, cb] : b) {
                for (std::size_t i = 0; i < key.size(); ++i) key[i] = ka[i] + kb[i];
                const Rational prod = ca * cb;
                auto [it, fresh] = acc.emplace(key, prod);
                if (!fresh) it->second += prod;
            }
        return assemble(std::move(target), std::move(acc));
    }

    friend Poly operator*(const Poly& lhs, const Rational& rhs) { return lhs * constant(rhs); }
    friend Poly operator*(const Rational& lhs, const Poly& rhs) { return constant(lhs) * rhs; }

    /// Integer power. Negative exponents are defined only for unit
    /// monomials over invertible variables (e.g. (X1*X2)^-3).
    Poly pow(long e) const {
        if (e == 0) return constant(1);
        if (e < 0) return inverted_monomial().pow(-e);
        Poly acc = constant(1);
        Poly base = *this;
        for (long n = e; n > 0; n >>= 1) {
            if (n & 1) acc = acc * base;
            if (n > 1) base = base * base;
        }
        return acc;
    }

    /// Formal partial derivative. Differentiating by x additionally
    /// applies the chain rule for u = exp(-x): d/dx u^n = -n u^n
    /// (per tensor factor).
    Poly partial(Var v) const {
        Poly result = formal_partial(v);
        if (v.base == VarBase::x) {
            const Var uv{VarBase::u, v.factor};
            const auto it = std::find(vars_.begin(), vars_.end(), uv);
            if (it != vars_.end()) {
                const auto col = static_cast<std::size_t>(it - vars_.begin());
                Poly chain;
                chain.vars_ = vars_;
                for (const auto& [k, c] : terms_)
                    if (k[col] != 0) chain.terms_.emplace(k, c * Rational(-k[col]));
                chain.normalize();
                result += chain;
            }
        }
        return result;
    }

    /// Exact evaluation; the assignment must cover every variable and
    /// must not send an invertible variable to zero.
    Rational eval(const std::map<Var, Rational>& at) const {
        std::vector<const Rational*> vals(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto it = at.find(vars_[i]);
            if (it == at.end())
                throw std::invalid_argument("Poly::eval: no value for " + vars_[i].name());
            if (vars_[i].invertible() && it->second.is_zero())
                throw std::domain_error("Poly::eval: zero assigned to invertible variable " + vars_[i].name());
            vals[i] = &it->second;
        }
        Rational total(0);
        for (const auto& [k, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < k.size(); ++i)
                if (k[i] != 0) t *= vals[i]->pow(k[i]);
            total += t;
        }
        return total;
    }

    /// Substitutes a polynomial for a variable; the variable must occur
    /// with non-negative exponents only.
    Poly subst(Var v, const Poly& image) const {
        return subst_power(v, [&image](std::int32_t e) {
            if (e < 0) throw std::domain_error("Poly::subst: negative exponent on substituted variable");
            return image.pow(e);
        });
    }

    /// Substitutes per-power: each occurrence v^e (e != 0) is replaced by
    /// image_of(e). Handles Laurent powers when image_of does.
    Poly subst_power(Var v, const std::function<Poly(std::int32_t)>& image_of) const {
        const auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return *this;
        const auto col = static_cast<std::size_t>(it - vars_.begin());
        Poly total;
        for (const auto& [k, c] : terms_) {
            Poly rest;
            rest.vars_ = vars_;
            Exponents key = k;
            const std::int32_t e = key[col];
            key[col] = 0;
            rest.terms_.emplace(std::move(key), c);
            rest.normalize();
            total += e == 0 ? rest : rest * image_of(e);
        }
        return total;
    }

    /// Simultaneous substitution: every variable with an image is
    /// replaced in one pass (images may mention the source variables).
    Poly subst_all(const std::function<std::optional<Poly>(Var)>& image_of) const {
        Poly total;
        for (const auto& [k, c] : terms_) {
            Poly term = constant(c);
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (auto img = image_of(vars_[i]))
                    term = term * img->pow(k[i]);
                else
                    term = term * variable(vars_[i], k[i]);
            }
            total += term;
        }
        return total;
    }

    Poly rename(Var from, Var to) const {
        return subst_all([&](Var v) -> std::optional<Poly> {
            if (v == from) return variable(to);
            return std::nullopt;
        });
    }

    /// Coefficient of v^e, as a polynomial in the remaining variables.
    Poly coeff_of(Var v, std::int32_t e) const {
        const auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return e == 0 ? *this : Poly();
        const auto col = static_cast<std::size_t>(it - vars_.begin());
        Poly out;
        out.vars_ = vars_;
        for (const auto& [k, c] : terms_)
            if (k[col] == e) {
                Exponents key = k;
                key[col] = 0;
                out.terms_.emplace(std::move(key), c);
            }
        out.normalize();
        return out;
    }

    long total_degree() const {
        long deg = 0;
        for (const auto& [k, c] : terms_)
            deg = std::max(deg, std::accumulate(k.begin(), k.end(), 0L));
        return deg;
    }

    long degree_in(std::span<const Var> subset) const {
        long deg = 0;
        const auto cols = columns_of(subset);
        for (const auto& [k, c] : terms_) {
            long d = 0;
            for (auto col : cols) d += k[col];
            deg = std::max(deg, d);
        }
        return deg;
    }

    std::int32_t min_exponent(Var v) const {
        const auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return 0;
        const auto col = static_cast<std::size_t>(it - vars_.begin());
        std::int32_t m = 0;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (first || k[col] < m) m = k[col];
            first = false;
        }
        return m;
    }

    /// Drops every term whose total degree over `subset` exceeds maxdeg.
    Poly truncate_degree_in(std::span<const Var> subset, long maxdeg) const {
        const auto cols = columns_of(subset);
        Poly out;
        out.vars_ = vars_;
        for (const auto& [k, c] : terms_) {
            long d = 0;
            for (auto col : cols) d += k[col];
            if (d <= maxdeg) out.terms_.emplace(k, c);
        }
        out.normalize();
        return out;
    }

    /// Canonical rendering: monomials in descending graded-lex order,
    /// e.g. "a*X^2 - b*X*Y - 2*c*X*Z - a*X".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            const bool neg = c.sign() < 0;
            std::string mono;
            for (std::size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i].name();
                if (k[i] != 1) mono += "^" + std::to_string(k[i]);
            }
            const Rational mag = neg ? -c : c;
            std::string body;
            if (mono.empty())
                body = mag.str();
            else if (mag.is_one())
                body = mono;
            else
                body = mag.str() + "*" + mono;
            if (first)
                out += (neg ? "-" : "") + body;
            else
                out += (neg ? " - " : " + ") + body;
            first = false;
        }
        return out;
    }

private:
    std::vector<Var> vars_;
    TermMap terms_;

    static Poly assemble(std::vector<Var> vars, TermMap terms) {
        Poly p;
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    static std::vector<Var> merge_vars(const std::vector<Var>& a, const std::vector<Var>& b) {
        std::vector<Var> out;
        out.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    /// Re-expresses the term map over a superset of this poly's variables.
    TermMap remapped(const std::vector<Var>& target) const {
        if (target == vars_) return terms_;
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const auto it = std::lower_bound(target.begin(), target.end(), vars_[i]);
            pos[i] = static_cast<std::size_t>(it - target.begin());
        }
        TermMap out;
        for (const auto& [k, c] : terms_) {
            Exponents key(target.size(), 0);
            for (std::size_t i = 0; i < k.size(); ++i) key[pos[i]] = k[i];
            out.emplace(std::move(key), c);
        }
        return out;
    }

    std::vector<std::size_t> columns_of(std::span<const Var> subset) const {
        std::vector<std::size_t> cols;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (std::find(subset.begin(), subset.end(), vars_[i]) != subset.end())
                cols.push_back(i);
        return cols;
    }

    Poly formal_partial(Var v) const {
        const auto it = std::find(vars_.begin(), vars_.end(), v);
        if (it == vars_.end()) return Poly();
        const auto col = static_cast<std::size_t>(it - vars_.begin());
        Poly out;
        out.vars_ = vars_;
        for (const auto& [k, c] : terms_) {
            if (k[col] == 0) continue;
            Exponents key = k;
            const Rational coeff = c * Rational(key[col]);
            key[col] -= 1;
            out.terms_.emplace(std::move(key), coeff);
        }
        out.normalize();
        return out;
    }

    Poly inverted_monomial() const {
        if (terms_.size() != 1)
            throw std::domain_error("Poly::pow: negative power of a non-monomial");
        const auto& [k, c] = *terms_.begin();
        Poly out;
        out.vars_ = vars_;
        Exponents key(k.size());
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] != 0 && !vars_[i].invertible())
                throw std::domain_error("Poly::pow: cannot invert non-invertible variable " + vars_[i].name());
            key[i] = -k[i];
        }
        out.terms_.emplace(std::move(key), c.inverse());
        out.normalize();
        return out;
    }

    void normalize() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        if (terms_.empty()) {
            vars_.clear();
            return;
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [k, c] : terms_)
            for (std::size_t i = 0; i < k.size(); ++i)
                if (k[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;

        std::vector<Var> nv;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) {
                nv.push_back(vars_[i]);
                keep.push_back(i);
            }
        TermMap nt;
        for (const auto& [k, c] : terms_) {
            Exponents key(keep.size());
            for (std::size_t i = 0; i < keep.size(); ++i) key[i] = k[keep[i]];
            nt.emplace(std::move(key), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }
};

}  // namespace booklie
