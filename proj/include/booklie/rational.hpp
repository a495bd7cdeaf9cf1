#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace booklie {

/// Exact rational number over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator; every
/// operation is exact. Backed by GMP's mpq_class, which maintains the
/// canonical form through arithmetic.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) { assign_fraction(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n, const mpz_class& d = mpz_class(1)) { assign_fraction(n, d); }

    /// Parses "12", "-3/4" or an exact decimal such as "0.125" / "-2.50".
    static Rational parse(std::string_view s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(den(), num());
    }

    /// Integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (e < 0) return inverse().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        Rational r;
        r.q_ = mpq_class(n) / mpq_class(d);
        return r;
    }

    double to_double() const { return q_.get_d(); }

    /// Canonical text form: "n" for integers, "n/d" otherwise.
    std::string str() const { return q_.get_str(); }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    void assign_fraction(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(n) / mpq_class(d);
    }

    mpq_class q_;
};

inline Rational Rational::parse(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'"); };
    if (s.empty()) fail();

    std::string body(s);
    if (auto slash = body.find('/'); slash != std::string::npos) {
        const std::string ns = body.substr(0, slash), ds = body.substr(slash + 1);
        if (ns.empty() || ds.empty()) fail();
        mpz_class n, d;
        if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0) fail();
        return Rational(n, d);
    }

    bool neg = false;
    std::string digits = body;
    if (digits[0] == '+' || digits[0] == '-') {
        neg = digits[0] == '-';
        digits.erase(0, 1);
    }
    std::string intpart = digits, fracpart;
    if (auto dot = digits.find('.'); dot != std::string::npos) {
        intpart = digits.substr(0, dot);
        fracpart = digits.substr(dot + 1);
    }
    if (intpart.empty() && fracpart.empty()) fail();
    for (char ch : intpart)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    for (char ch : fracpart)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail();

    mpz_class n(intpart.empty() ? std::string("0") : intpart);
    mpz_class scale(1);
    for (char ch : fracpart) {
        n = n * 10 + (ch - '0');
        scale *= 10;
    }
    if (neg) n = -n;
    return Rational(n, scale);
}

}  // namespace booklie
