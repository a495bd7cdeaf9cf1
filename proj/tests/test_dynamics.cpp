#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "booklie/dynamics.hpp"

using namespace booklie;
using Catch::Approx;

namespace {

NumericParams lv_params(double b) {
    NumericParams p;
    p.v = {0, b, 0, 0, 0, 0};
    return p;
}

Vec3 rand_state(std::mt19937_64& rng, double lo = 0.5, double hi = 2.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return {d(rng), d(rng), d(rng)};
}

}  // namespace

TEST_CASE("LV vector field hand values", "[dynamics]") {
    const LVHamiltonian H{{1, 1, 1}, {0, 0, 0}};
    const Vec3 f = lv_vector_field(1.0, H, {1, 1, 1});
    CHECK(f[0] == Approx(0.0));
    CHECK(f[1] == Approx(2.0));
    CHECK(f[2] == Approx(-2.0));

    const Vec3 z = lv_vector_field(0.0, H, {1, 2, 3});
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);
}

TEST_CASE("closed-form vector fields agree with the bracket-driven flow", "[dynamics][property]") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> coeff(-1.5, 1.5);

    SECTION("LV stratum") {
        for (int t = 0; t < 100; ++t) {
            const double b = coeff(rng);
            LVHamiltonian H{{coeff(rng), coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng), coeff(rng)}};
            const Vec3 s = rand_state(rng);
            const Vec3 lhs = lv_vector_field(b, H, s);
            const Vec3 rhs = hamiltonian_flow(lv_params(b), H, s);
            for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == Approx(rhs[i]).margin(1e-12));
        }
    }
    SECTION("deformed system, x-variant of the e-term") {
        for (int t = 0; t < 100; ++t) {
            NumericParams p;
            for (auto& value : p.v) value = coeff(rng);
            LVHamiltonian H{{coeff(rng), coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng), coeff(rng)}};
            const Vec3 s = rand_state(rng);
            const Vec3 lhs = deformed_vector_field(p, H, s);
            const Vec3 rhs = hamiltonian_flow(p, H, s);
            for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == Approx(rhs[i]).margin(1e-10));
        }
    }
    SECTION("the y-variant transcription differs by 2 e a1 Y (X - Y) in Zdot") {
        NumericParams p;
        for (auto& value : p.v) value = coeff(rng);
        LVHamiltonian H{{coeff(rng), coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng), coeff(rng)}};
        const Vec3 s = rand_state(rng);
        const Vec3 xv = deformed_vector_field(p, H, s, ETermVariant::x_variant);
        const Vec3 yv = deformed_vector_field(p, H, s, ETermVariant::y_variant);
        CHECK(yv[0] == Approx(xv[0]));
        CHECK(yv[1] == Approx(xv[1]));
        const double gap = -2 * p.e() * H.alpha[0] * s[1] * (s[0] - s[1]);
        CHECK(xv[2] - yv[2] == Approx(gap).margin(1e-12));
    }
}

TEST_CASE("deformed field reduces to the LV field on the C stratum", "[dynamics]") {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> coeff(-1.5, 1.5);
    for (int t = 0; t < 50; ++t) {
        const double b = coeff(rng);
        LVHamiltonian H{{coeff(rng), coeff(rng), coeff(rng)}, {coeff(rng), coeff(rng), coeff(rng)}};
        const Vec3 s = rand_state(rng);
        const Vec3 lhs = deformed_vector_field(lv_params(b), H, s);
        const Vec3 rhs = lv_vector_field(b, H, s);
        for (std::size_t i = 0; i < 3; ++i) CHECK(lhs[i] == Approx(rhs[i]).margin(1e-13));
    }
}

TEST_CASE("Casimir generates no flow; alpha-free a-term check", "[dynamics]") {
    SECTION("Casimir as Hamiltonian") {
        std::mt19937_64 rng(33);
        std::uniform_real_distribution<double> coeff(-1.5, 1.5);
        for (int t = 0; t < 30; ++t) {
            NumericParams p;
            for (auto& value : p.v) value = coeff(rng);
            const Vec3 s = rand_state(rng);
            const Vec3 f = hamiltonian_flow(p, casimir_gradient(p, s[0], s[1], s[2]), s);
            for (std::size_t i = 0; i < 3; ++i) CHECK(f[i] == Approx(0.0).margin(1e-12));
        }
    }
    SECTION("a = 1, zero Hamiltonian coefficients give the zero field") {
        NumericParams p;
        p.v = {1, 0, 0, 0, 0, 0};
        const LVHamiltonian H{{0, 0, 0}, {0, 0, 0}};
        const Vec3 f = deformed_vector_field(p, H, {1.3, 0.7, 1.9});
        CHECK(f[0] == 0.0);
        CHECK(f[1] == 0.0);
        CHECK(f[2] == 0.0);
    }
    SECTION("H = X on the LV stratum flows as (0, XY, -XZ)") {
        const NumericParams p = lv_params(1.0);
        const LVHamiltonian H{{1, 0, 0}, {0, 0, 0}};
        const Vec3 s = {1.5, 2.0, 0.5};
        const Vec3 f = hamiltonian_flow(p, H, s);
        CHECK(f[0] == Approx(0.0));
        CHECK(f[1] == Approx(s[0] * s[1]));
        CHECK(f[2] == Approx(-s[0] * s[2]));
    }
}

TEST_CASE("integrator on the zero field", "[dynamics]") {
    const NumericParams p = lv_params(1.0);
    const LVHamiltonian H{{0, 0, 0}, {0, 0, 0}};
    const auto traj = integrate([](const Vec3&) { return Vec3{0, 0, 0}; }, p, H, {1, 2, 3}, 5.0);
    CHECK(traj.status == RunStatus::ok);
    for (const auto& pt : traj.points) {
        CHECK(pt.state.s[0] == 1.0);
        CHECK(pt.state.s[1] == 2.0);
        CHECK(pt.state.s[2] == 3.0);
    }
    CHECK(traj.back().state.t == Approx(5.0));
}

TEST_CASE("LV demo run conserves H and the Casimir up to the domain guard", "[dynamics]") {
    // this orbit is unbounded: Ydot = Y(X + Z + 2) >= 2Y, so X and Z
    // collapse like exp(-exp(2t)) and cross the positivity floor near
    // t = 1.32; the guard aborts there with the last good state, and
    // the conservation bound must hold on everything recorded
    const NumericParams p = lv_params(1.0);
    const LVHamiltonian H{{1, 1, 1}, {1, 1, 1}};
    const auto field = [&](const Vec3& s) { return lv_vector_field(1.0, H, s); };
    IntegrateOptions opts;
    opts.atol = 1e-30;  // pure relative control keeps log X accurate down to the floor
    const auto traj = integrate(field, p, H, {1, 2, 3}, 20.0, opts);
    REQUIRE(traj.status == RunStatus::domain_exit);
    CHECK(traj.back().state.t > 1.0);
    CHECK(traj.max_rel_drift_H() < 1e-8);
    CHECK(traj.max_rel_drift_C() < 1e-8);
    CHECK(!traj.message.empty());

    SECTION("positivity holds along the recorded LV flow") {
        for (const auto& pt : traj.points) {
            CHECK(pt.state.s[0] > 0);
            CHECK(pt.state.s[1] > 0);
            CHECK(pt.state.s[2] > 0);
        }
    }
}

TEST_CASE("bounded LV run (no log terms) completes the full horizon", "[dynamics]") {
    // with beta = 0 the plane X + Y + Z = const is invariant, so the
    // orbit is bounded and the full horizon is reachable
    const NumericParams p = lv_params(1.0);
    const LVHamiltonian H{{1, 1, 1}, {0, 0, 0}};
    const auto field = [&](const Vec3& s) { return lv_vector_field(1.0, H, s); };
    const auto traj = integrate(field, p, H, {1, 2, 3}, 20.0);
    REQUIRE(traj.status == RunStatus::ok);
    CHECK(traj.back().state.t == Approx(20.0));
    CHECK(traj.max_rel_drift_H() < 1e-8);
    CHECK(traj.max_rel_drift_C() < 1e-8);
    for (const auto& pt : traj.points) {
        CHECK(pt.state.s[0] > 0);
        CHECK(pt.state.s[1] > 0);
        CHECK(pt.state.s[2] > 0);
    }
}

TEST_CASE("deformed demo run conserves H and the Casimir up to the singular regime", "[dynamics]") {
    // Y reaches the 1/Y-singular region in finite time (X grows to
    // compensate log Y in H); the step control collapses there and the
    // run aborts with the last good state
    NumericParams p;
    p.v = {1, 1, 1, 1, 1, 1};
    const LVHamiltonian H{{1, 1, 1}, {1, 1, 1}};
    const auto field = [&](const Vec3& s) { return deformed_vector_field(p, H, s); };
    IntegrateOptions opts;
    opts.atol = 1e-30;
    const auto traj = integrate(field, p, H, {1, 2, 3}, 5.0, opts);
    REQUIRE((traj.status == RunStatus::step_underflow || traj.status == RunStatus::domain_exit));
    CHECK(traj.max_rel_drift_H() < 1e-8);
    CHECK(traj.max_rel_drift_C() < 1e-8);
    CHECK(!traj.message.empty());
}

TEST_CASE("the y-variant transcription measurably breaks conservation", "[dynamics]") {
    // same run, both transcriptions, short horizon before the singular
    // regime: the bracket-consistent field conserves to 1e-11 while the
    // y-variant drifts at the percent level
    NumericParams p;
    p.v = {1, 1, 1, 1, 1, 1};
    const LVHamiltonian H{{1, 1, 1}, {1, 1, 1}};
    IntegrateOptions opts;
    opts.atol = 1e-30;
    const auto run = [&](ETermVariant variant) {
        const auto field = [&, variant](const Vec3& s) {
            return deformed_vector_field(p, H, s, variant);
        };
        return integrate(field, p, H, {1, 2, 3}, 0.05, opts);
    };
    const auto xv = run(ETermVariant::x_variant);
    const auto yv = run(ETermVariant::y_variant);
    REQUIRE(xv.status == RunStatus::ok);
    REQUIRE(yv.status == RunStatus::ok);
    CHECK(xv.max_rel_drift_H() < 1e-8);
    CHECK(yv.max_rel_drift_H() > 1e-3);
    CHECK(yv.max_rel_drift_C() > 1e-3);
}

TEST_CASE("backward integration returns to the initial state", "[dynamics]") {
    const NumericParams p = lv_params(1.0);
    const LVHamiltonian H{{1, 1, 1}, {0, 0, 0}};
    const auto field = [&](const Vec3& s) { return lv_vector_field(1.0, H, s); };
    const auto fwd = integrate(field, p, H, {1, 2, 3}, 2.0);
    REQUIRE(fwd.status == RunStatus::ok);
    const auto bwd = integrate(field, p, H, fwd.back().state.s, -2.0);
    REQUIRE(bwd.status == RunStatus::ok);
    CHECK(bwd.back().state.t == Approx(-2.0));
    CHECK(bwd.back().state.s[0] == Approx(1.0).margin(1e-7));
    CHECK(bwd.back().state.s[1] == Approx(2.0).margin(1e-7));
    CHECK(bwd.back().state.s[2] == Approx(3.0).margin(1e-7));
}

TEST_CASE("b-rescaling is a time reparametrization", "[dynamics]") {
    const LVHamiltonian H{{1, 1, 1}, {0, 0, 0}};
    const Vec3 s0 = {1, 2, 3};
    const auto run = [&](double b, double t_end) {
        const NumericParams p = lv_params(b);
        const auto field = [&, b](const Vec3& s) { return lv_vector_field(b, H, s); };
        return integrate(field, p, H, s0, t_end);
    };
    const auto t1 = run(1.0, 2.0);
    const auto t2 = run(2.0, 1.0);
    REQUIRE(t1.status == RunStatus::ok);
    REQUIRE(t2.status == RunStatus::ok);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(t1.back().state.s[i] == Approx(t2.back().state.s[i]).margin(1e-7));
}

TEST_CASE("domain guard aborts with the last good state", "[dynamics]") {
    // Xdot = -X decays through the floor while the log terms are active
    const NumericParams p = lv_params(1.0);
    const LVHamiltonian H{{0, 0, 0}, {0, 1, 0}};  // beta2 = 1: Xdot = -bX
    const auto field = [&](const Vec3& s) { return lv_vector_field(1.0, H, s); };
    const auto traj = integrate(field, p, H, {1, 1, 1}, 40.0);
    CHECK(traj.status == RunStatus::domain_exit);
    CHECK(!traj.points.empty());
    CHECK(traj.back().state.s[0] > 0);
    CHECK(traj.back().state.t < 40.0);
    CHECK(!traj.message.empty());
}

TEST_CASE("involution of H and the Casimir", "[dynamics]") {
    SECTION("LV stratum") {
        const LVHamiltonian H{{1, 1, 1}, {1, 1, 1}};
        CHECK(involution_check(lv_params(1.0), H) < 1e-10);
    }
    SECTION("full parameter set") {
        NumericParams p;
        p.v = {1, 1, 1, 1, 1, 1};
        const LVHamiltonian H{{1, 1, 1}, {1, 1, 1}};
        CHECK(involution_check(p, H) < 1e-10);
    }
    SECTION("H = X against the LV Casimir YZ/X") {
        const LVHamiltonian H{{1, 0, 0}, {0, 0, 0}};
        CHECK(involution_check(lv_params(1.0), H) < 1e-12);
    }
}
