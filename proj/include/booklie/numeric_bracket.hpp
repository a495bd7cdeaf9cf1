#pragma once

#include <array>
#include <cmath>

#include "booklie/poisson.hpp"

namespace booklie {

/// Double-precision view of the six parameters, for the numeric chart
/// and dynamics layers.
struct NumericParams {
    std::array<double, 6> v{};

    static NumericParams from(const PLParams& P) {
        NumericParams n;
        const auto r = P.values();
        for (int i = 0; i < 6; ++i) n.v[i] = r[i].to_double();
        return n;
    }

    double a() const { return v[0]; }
    double b() const { return v[1]; }
    double c() const { return v[2]; }
    double d() const { return v[3]; }
    double e() const { return v[4]; }
    double f() const { return v[5]; }
};

struct BracketValues {
    double xy, xz, yz;
};

/// The fundamental group-chart brackets evaluated at (X,Y,Z).
inline BracketValues group_brackets(const NumericParams& p, double X, double Y, double Z) {
    return {p.a() * X * X - p.b() * X * Y - 2 * p.c() * X * Z - p.a() * X,
            p.d() * X * X + 2 * p.e() * X * Y + p.b() * X * Z - p.d() * X,
            -p.f() * X * X + p.e() * Y * Y + p.b() * Y * Z - p.d() * Y + p.c() * Z * Z + p.a() * Z +
                p.f()};
}

/// Generic Casimir [f(1+X^2) + (X-1)(dY-aZ) + eY^2 + (bY+cZ)Z] / X.
inline double casimir_value(const NumericParams& p, double X, double Y, double Z) {
    return (p.f() * (1 + X * X) + (X - 1) * (p.d() * Y - p.a() * Z) + p.e() * Y * Y +
            (p.b() * Y + p.c() * Z) * Z) /
           X;
}

inline std::array<double, 3> casimir_gradient(const NumericParams& p, double X, double Y, double Z) {
    const double quad = p.e() * Y * Y + p.b() * Y * Z + p.c() * Z * Z;
    return {p.f() * (1 - 1 / (X * X)) + (p.d() * Y - p.a() * Z) / (X * X) - quad / (X * X),
            (1 - 1 / X) * p.d() + (2 * p.e() * Y + p.b() * Z) / X,
            -(1 - 1 / X) * p.a() + (p.b() * Y + 2 * p.c() * Z) / X};
}

}  // namespace booklie
