#pragma once

#include <random>
#include <vector>

#include "booklie/poly.hpp"
#include "booklie/rational.hpp"

namespace booklie::test {

using Rng = std::mt19937_64;

/// Random nonzero rational with numerator in [-50,50] and denominator
/// in [1,10], the exact-sampling range used throughout the suite.
inline Rational rand_rational(Rng& rng) {
    long n = 0;
    while (n == 0) n = static_cast<long>(rng() % 101) - 50;
    const long d = static_cast<long>(rng() % 10) + 1;
    return Rational(n, d);
}

/// Random sparse polynomial over the given variables.
inline Poly rand_poly(Rng& rng, const std::vector<Var>& pool, int max_terms = 4, int max_exp = 3) {
    Poly p;
    const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<Var, std::int32_t>> mono;
        for (const Var& v : pool)
            if (rng() % 2 == 0) {
                auto e = static_cast<std::int32_t>(rng() % static_cast<unsigned>(max_exp + 1));
                if (v.invertible() && rng() % 4 == 0) e = -e;
                if (e != 0) mono.emplace_back(v, e);
            }
        p += Poly::monomial(rand_rational(rng), mono);
    }
    return p;
}

}  // namespace booklie::test
