#include <catch2/catch_amalgamated.hpp>

#include "booklie/params_json.hpp"
#include "booklie/poisson.hpp"
#include "support.hpp"

using namespace booklie;

namespace {

Poly V(Var v, std::int32_t e = 1) { return Poly::variable(v, e); }

PLParams lv_params_symbolic() {
    PLParams P = PLParams::zero();
    P.v[1] = V(vars::b);
    return P;
}

}  // namespace

TEST_CASE("build_structure reproduces the generic bracket table", "[poisson]") {
    SECTION("Lotka-Volterra stratum (0,b,0,0,0,0)") {
        const auto S = PoissonStructure::build(lv_params_symbolic(), ChartTag::group);
        CHECK(S.fundamental(0, 1) == -(V(vars::b) * V(vars::X) * V(vars::Y)));
        CHECK(S.fundamental(0, 2) == V(vars::b) * V(vars::X) * V(vars::Z));
        CHECK(S.fundamental(1, 2) == V(vars::b) * V(vars::Y) * V(vars::Z));
    }
    SECTION("all-zero parameters") {
        const auto S = PoissonStructure::build(PLParams::zero(), ChartTag::group);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(S.fundamental(i, j).is_zero());
    }
    SECTION("coboundary identification (a,0,0,d,0,-r12)") {
        PLParams P = PLParams::zero();
        P.v[0] = V(vars::a);
        P.v[3] = V(vars::d);
        P.v[5] = -V(vars::r12);
        const auto S = PoissonStructure::build(P, ChartTag::group);
        const Poly expected = V(vars::r12) * (V(vars::X, 2) - Poly::constant(1)) -
                              V(vars::d) * V(vars::Y) + V(vars::a) * V(vars::Z);
        CHECK(S.fundamental(1, 2) == expected);
    }
    SECTION("generic table, term for term") {
        const auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::group);
        const Poly X = V(vars::X), Y = V(vars::Y), Z = V(vars::Z);
        const Poly a = V(vars::a), b = V(vars::b), c = V(vars::c);
        const Poly d = V(vars::d), e = V(vars::e), f = V(vars::f);
        CHECK(S.fundamental(0, 1) == a * X * X - b * X * Y - Rational(2) * c * X * Z - a * X);
        CHECK(S.fundamental(0, 2) == d * X * X + Rational(2) * e * X * Y + b * X * Z - d * X);
        CHECK(S.fundamental(1, 2) ==
              -(f * X * X) + e * Y * Y + b * Y * Z - d * Y + c * Z * Z + a * Z + f);
        CHECK(S.fundamental(0, 1).str() == "a*X^2 - b*X*Y - 2*c*X*Z - a*X");
    }
}

TEST_CASE("group-chart brackets are quadratic", "[poisson]") {
    const auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::group);
    const std::array<Var, 3> chart = {vars::X, vars::Y, vars::Z};
    CHECK(S.fundamental(0, 1).degree_in(chart) <= 2);
    CHECK(S.fundamental(0, 2).degree_in(chart) <= 2);
    CHECK(S.fundamental(1, 2).degree_in(chart) <= 2);
    // the only constant term is the +f in {Y,Z}
    CHECK(S.fundamental(0, 1).coeff_of(vars::X, 0).coeff_of(vars::Y, 0).coeff_of(vars::Z, 0).is_zero());
    CHECK(S.fundamental(0, 2).coeff_of(vars::X, 0).coeff_of(vars::Y, 0).coeff_of(vars::Z, 0).is_zero());
    CHECK(S.fundamental(1, 2).coeff_of(vars::X, 0).coeff_of(vars::Y, 0).coeff_of(vars::Z, 0) ==
          V(vars::f));
}

TEST_CASE("bracket extension is antisymmetric, bilinear, Leibniz", "[poisson][property]") {
    const auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::group);
    CHECK(S.bracket_poly(V(vars::X), V(vars::X)).is_zero());
    CHECK_THROWS_AS(S.bracket_poly(V(vars::u), V(vars::X)), std::invalid_argument);
    CHECK_THROWS_AS(PoissonStructure::build(PLParams::symbolic(), ChartTag::local)
                        .bracket_poly(V(vars::X), V(vars::y)),
                    std::invalid_argument);

    booklie::test::Rng rng(20244);
    const std::vector<Var> pool = {vars::X, vars::Y, vars::Z};
    for (int t = 0; t < 25; ++t) {
        const Poly p = booklie::test::rand_poly(rng, pool), q = booklie::test::rand_poly(rng, pool),
                   r = booklie::test::rand_poly(rng, pool);
        CHECK(S.bracket_poly(p, q) == -S.bracket_poly(q, p));
        CHECK(S.bracket_poly(p * q, r) == p * S.bracket_poly(q, r) + S.bracket_poly(p, r) * q);
        CHECK(S.bracket_poly(p + q, r) == S.bracket_poly(p, r) + S.bracket_poly(q, r));
    }
}

TEST_CASE("Jacobi residual vanishes identically for the generic family", "[poisson]") {
    SECTION("fully symbolic parameters") {
        const auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::group);
        CHECK(jacobi_residual(S).is_zero());
    }
    SECTION("local chart, fully symbolic") {
        const auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::local);
        CHECK(jacobi_residual(S).is_zero());
    }
    SECTION("numeric specialization (0,1,0,0,0,0)") {
        const auto S = PoissonStructure::build(
            PLParams::numeric({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)}),
            ChartTag::group);
        CHECK(jacobi_residual(S).is_zero());
    }
    SECTION("corrupted table fails") {
        auto S = PoissonStructure::build(PLParams::symbolic(), ChartTag::group);
        S.set_fundamental(0, 1, V(vars::Y, 2));
        CHECK(!jacobi_residual(S).is_zero());
    }
}

TEST_CASE("generic Casimir", "[poisson]") {
    SECTION("LV stratum gives YZ/X") {
        PLParams P = PLParams::zero();
        P.v[1] = Poly::constant(1);
        const RationalFunction C = casimir(P);
        CHECK(C.numerator() == V(vars::Y) * V(vars::Z));
        CHECK(C.denominator_exponent() == 1);
        CHECK(C.denominator_variable() == vars::X);
        CHECK(C.str() == "(Y*Z)/X");
        CHECK(RationalFunction::from_laurent(V(vars::Y), vars::X).str() == "Y");
    }
    SECTION("zero parameters give the zero function") { CHECK(casimir(PLParams::zero()).is_zero()); }
    SECTION("Poisson-commutes with the coordinates, symbolically") {
        const PLParams P = PLParams::symbolic();
        const auto S = PoissonStructure::build(P, ChartTag::group);
        const Poly C = casimir(P).as_laurent();
        CHECK(S.bracket_poly(C, V(vars::X)).is_zero());
        CHECK(S.bracket_poly(C, V(vars::Y)).is_zero());
        CHECK(S.bracket_poly(C, V(vars::Z)).is_zero());
    }
    SECTION("Casimir centrality through the public bracket") {
        const auto S = PoissonStructure::build(lv_params_symbolic(), ChartTag::group);
        const Poly C = V(vars::Y) * V(vars::Z) * V(vars::X, -1);
        CHECK(S.bracket(C, V(vars::X)).is_zero());
        CHECK(S.bracket(V(vars::Y), V(vars::Z)).as_laurent() ==
              V(vars::b) * V(vars::Y) * V(vars::Z));
    }
}

TEST_CASE("local chart table and linearization", "[poisson]") {
    const PLParams P = PLParams::symbolic();
    const auto S = PoissonStructure::build(P, ChartTag::local);
    const Poly a = V(vars::a), b = V(vars::b), c = V(vars::c);
    const Poly d = V(vars::d), e = V(vars::e), f = V(vars::f);
    const Poly u = V(vars::u), y = V(vars::y), z = V(vars::z), one = Poly::constant(1);

    CHECK(S.fundamental(0, 1) == a * (one - u) + b * y + Rational(2) * c * z);
    CHECK(S.fundamental(0, 2) == d * (one - u) - Rational(2) * e * y - b * z);
    CHECK(S.fundamental(1, 2) ==
          f * (one - u * u) + e * y * y + b * y * z - d * y + c * z * z + a * z);

    SECTION("linearization reproduces the Lie-Poisson table") {
        const LinearBracketTable L = linearize(S);
        const Poly x = V(vars::x);
        CHECK(L.xy == a * x + b * y + Rational(2) * c * z);
        CHECK(L.xz == d * x - Rational(2) * e * y - b * z);
        CHECK(L.yz == Rational(2) * f * x - d * y + a * z);
    }
    SECTION("zero parameters linearize to zero") {
        const auto L = linearize(PoissonStructure::build(PLParams::zero(), ChartTag::local));
        CHECK(L.xy.is_zero());
        CHECK(L.xz.is_zero());
        CHECK(L.yz.is_zero());
    }
    SECTION("linearization is antisymmetric and satisfies Jacobi (dual Lie bracket)") {
        // check by treating the linear table as structure constants and
        // re-deriving Jacobi through the bracket machinery on a linear
        // Poisson structure over plain variables x,y,z with u absent
        const LinearBracketTable L = linearize(S);
        const auto lin = PoissonStructure::from_table(ChartTag::local, L.xy, L.xz, L.yz);
        CHECK(jacobi_residual(lin).is_zero());
    }
    SECTION("central-difference cross-check of the linearization at the origin") {
        // exact rational finite differences of the local brackets,
        // step h = 1/100000, against the linear table coefficients
        const PLParams N = PLParams::numeric(
            {Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
        const auto Sn = PoissonStructure::build(N, ChartTag::local);
        const auto Ln = linearize(Sn);
        const Rational h(1, 100000);
        const Rational tol(1, 1000000);

        struct Probe {
            Var coord;       // differentiation direction (x, y or z)
            Var linear_var;  // matching variable of the linear table
        };
        const std::array<Probe, 3> probes = {{{vars::x, vars::x}, {vars::y, vars::y}, {vars::z, vars::z}}};
        const std::array<Poly, 3> brackets = {Sn.fundamental(0, 1), Sn.fundamental(0, 2),
                                              Sn.fundamental(1, 2)};
        const std::array<Poly, 3> linear = {Ln.xy, Ln.xz, Ln.yz};

        auto eval_at = [](const Poly& p, const Rational& xv, const Rational& yv, const Rational& zv) {
            // u = exp(-x) ~ 1 - x + x^2/2 exactly to O(h^3): for the FD
            // cross-check we evaluate u by its quadratic Taylor value,
            // which keeps the central difference accurate to O(h^2)
            const Rational uv = Rational(1) - xv + xv * xv * Rational(1, 2);
            return p.eval({{vars::u, uv}, {vars::y, yv}, {vars::z, zv}, {vars::x, xv}});
        };

        for (int bi = 0; bi < 3; ++bi) {
            for (const auto& probe : probes) {
                const Rational xp = probe.coord == vars::x ? h : Rational(0);
                const Rational yp = probe.coord == vars::y ? h : Rational(0);
                const Rational zp = probe.coord == vars::z ? h : Rational(0);
                const Rational fd =
                    (eval_at(brackets[bi], xp, yp, zp) - eval_at(brackets[bi], -xp, -yp, -zp)) /
                    (Rational(2) * h);
                const Poly coeff_poly = linear[bi].coeff_of(probe.linear_var, 1);
                const Rational coeff = coeff_poly.is_zero() ? Rational(0) : coeff_poly.constant_value();
                const Rational err = fd - coeff;
                CHECK((err < tol && -tol < err));
            }
        }
    }
}

TEST_CASE("local-to-group chart conversion matches the direct build", "[poisson]") {
    const PLParams P = PLParams::symbolic();
    const auto G = PoissonStructure::build(P, ChartTag::group);
    const auto L = PoissonStructure::build(P, ChartTag::local);
    const auto converted = to_group_chart(L);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(converted.fundamental(i, j) == G.fundamental(i, j));
}

TEST_CASE("PLParams parse from JSON", "[poisson]") {
    using nlohmann::json;

    SECTION("integers, exact decimal strings and sym") {
        const json j = {{"a", 0},     {"b", "sym"}, {"c", "-0.5"},
                        {"d", "3/4"}, {"e", 2},     {"f", "-1"}};
        const PLParams P = plparams_from_json(j);
        CHECK(P.a().is_zero());
        CHECK(P.b() == Poly::variable(vars::b));
        CHECK(P.c() == Poly::constant(Rational(-1, 2)));
        CHECK(P.d() == Poly::constant(Rational(3, 4)));
        CHECK(P.e() == Poly::constant(Rational(2)));
        CHECK(P.f() == Poly::constant(Rational(-1)));
    }
    SECTION("floating JSON numbers are rejected: exactness over convenience") {
        const json j = {{"a", 0.5}, {"b", 0}, {"c", 0}, {"d", 0}, {"e", 0}, {"f", 0}};
        CHECK_THROWS_AS(plparams_from_json(j), std::invalid_argument);
    }
    SECTION("missing fields are rejected") {
        const json j = {{"a", 0}, {"b", 0}};
        CHECK_THROWS_AS(plparams_from_json(j), std::invalid_argument);
    }
    SECTION("round-trip through serialization") {
        const json j = {{"a", 1}, {"b", "2"}, {"c", "-1/3"}, {"d", 0}, {"e", "0.25"}, {"f", -7}};
        const PLParams P = plparams_from_json(j);
        const PLParams Q = plparams_from_json(plparams_to_json(P));
        for (int i = 0; i < 6; ++i) CHECK(P.v[static_cast<std::size_t>(i)] == Q.v[static_cast<std::size_t>(i)]);
    }
    SECTION("CSV form") {
        const PLParams P = plparams_from_csv("0,0,-0.5,-3,0,0");
        CHECK(P.values()[2] == Rational(-1, 2));
        CHECK(P.values()[3] == Rational(-3));
        CHECK_THROWS_AS(plparams_from_csv("1,2,3"), std::invalid_argument);
        CHECK_THROWS_AS(plparams_from_csv("1,2,3,4,5,x"), std::invalid_argument);
    }
}

TEST_CASE("pointwise Poisson rank", "[poisson]") {
    PLParams P = PLParams::zero();
    P.v[1] = Poly::constant(1);
    const auto S = PoissonStructure::build(P, ChartTag::group);
    const std::map<Var, Rational> pt = {{vars::X, Rational(1)}, {vars::Y, Rational(1)}, {vars::Z, Rational(1)}};
    CHECK(poisson_rank_at(S, pt) == 2);
    CHECK(poisson_rank_at(PoissonStructure::build(PLParams::zero(), ChartTag::group), pt) == 0);
}
