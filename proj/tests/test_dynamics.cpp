#include <doctest.h>

#include "painlab/dynamics.hpp"

using namespace painlab;

TEST_CASE("force sign conventions") {
    // the quarter-scaled first transcendent
    CHECK(force(p1_hamiltonian(), 1.0, 0.0).real() == doctest::Approx(1.5));
    CHECK(force(p1_hamiltonian(), 0.5, 2.0).real() == doctest::Approx((6.0 * 0.25 + 2.0) / 4.0));
    // the second transcendent with its sign-carrying constant
    const double u = 0.8, t = 0.6, al = 0.4;
    CHECK(force(p2_hamiltonian(al), u, t).real() ==
          doctest::Approx(2.0 * u * u * u + t * u - al));
    // truncated third: 2 nu^2 e^t sinh 2u
    const double nu = 0.5;
    CHECK(force(p3_truncated(nu), u, t).real() ==
          doctest::Approx(2.0 * nu * nu * std::exp(t) * std::sinh(2.0 * u)));
    // hyperbolic two-zero force from its Hamiltonian form
    const double a = 0.4, b = -0.3, g = 0.6, d = 0.2;
    const double expected = -2.0 * a * std::cosh(u) / std::pow(std::sinh(u), 3) -
                            2.0 * b * std::sinh(u) / std::pow(std::cosh(u), 3) -
                            g * std::exp(2 * t) * std::sinh(2 * u) -
                            0.5 * d * std::exp(4 * t) * std::sinh(4 * u);
    CHECK(force(p5_hamiltonian(a, b, g, d), u, t).real() == doctest::Approx(expected));
}

TEST_CASE("force equals minus the gradient of the classical potential") {
    for (const PotentialSpec& s :
         {p1_hamiltonian(), p2_hamiltonian(0.4), p4_hamiltonian(0.3, 0.7),
          p5_hamiltonian(0.4, -0.3, 0.6, 0.2), p3_truncated(0.5)}) {
        const cplx u(0.8, 0.0);
        const double t = 0.45;
        const cplx fd = central_diff([&](cplx x) { return classical_V(s, x, t); }, u, 1e-5);
        CHECK(std::abs(force(s, u, t) + fd) < 1e-6);
    }
    // quantum-side two-zero specs acquire the correction
    PotentialSpec q = quantum_shift(p4_hamiltonian(0.3, 0.7));
    const cplx u(0.8, 0.0);
    const cplx fd = central_diff([&](cplx x) { return classical_V(q, x, 0.45); }, u, 1e-5);
    CHECK(std::abs(force(q, u, 0.45) + fd) < 1e-6);
    // and the corrected classical potential coincides with the unshifted one
    CHECK(std::abs(classical_V(q, u, 0.45) - classical_V(p4_hamiltonian(0.3, 0.7), u, 0.45)) <
          1e-12);
}

TEST_CASE("closed forms") {
    IntegratorConfig cfg;
    cfg.h = 1e-3;
    // free motion
    {
        const auto tr = integrate(harmonic(0.0, 0.0), {0.3, 0}, {0.8, 0}, 0.0, 1.0, cfg);
        for (size_t i = 0; i < tr.size(); i += 100)
            CHECK(std::abs(tr.u[i] - (0.3 + 0.8 * tr.t[i])) < 1e-12);
    }
    // oscillator at unit stiffness x^2
    {
        const auto tr = integrate(harmonic(1.0, 0.0), {1.0, 0}, {0.0, 0}, 0.0, 1.0, cfg);
        for (size_t i = 0; i < tr.size(); i += 100)
            CHECK(std::abs(tr.u[i] - std::cos(std::sqrt(2.0) * tr.t[i])) < 1e-7);
    }
}

TEST_CASE("self-convergence and reversibility") {
    IntegratorConfig cfg;
    cfg.h = 1e-3;
    const auto spec = p1_hamiltonian();
    const auto a = integrate(spec, {0.0, 0}, {0.0, 0}, 0.0, 1.0, cfg);
    IntegratorConfig fine = cfg;
    fine.h = 5e-4;
    const auto b = integrate(spec, {0.0, 0}, {0.0, 0}, 0.0, 1.0, fine);
    CHECK(std::abs(a.u.back() - b.u.back()) < 1e-8);
    const auto back = integrate(spec, a.u.back(), a.v.back(), 1.0, 0.0, cfg);
    CHECK(std::abs(back.u.back()) + std::abs(back.v.back()) < 1e-7);
}

TEST_CASE("adaptive stepping tracks the fixed grid") {
    IntegratorConfig ad;
    ad.method = IntegratorConfig::Method::AdaptiveCK;
    ad.h = 1e-2;
    ad.abs_tol = ad.rel_tol = 1e-11;
    IntegratorConfig fx;
    fx.h = 2e-4;
    const auto spec = p2_hamiltonian(0.4);
    const auto a = integrate(spec, {0.7, 0}, {0.1, 0}, 0.0, 1.0, ad);
    const auto b = integrate(spec, {0.7, 0}, {0.1, 0}, 0.0, 1.0, fx);
    CHECK(std::abs(a.u.back() - b.u.back()) < 1e-8);
    CHECK(std::abs(a.t.back() - 1.0) < 1e-12);
}

TEST_CASE("hamiltonian drift stays at the discretization floor") {
    IntegratorConfig cfg;
    cfg.h = 1e-3;
    for (const PotentialSpec& s : {p1_hamiltonian(), p2_hamiltonian(0.4)}) {
        const auto tr = integrate(s, {0.7, 0}, {0.1, 0}, 0.0, 1.0, cfg);
        CHECK(hamiltonian_drift(tr, s) < 1e-6);
    }
    // autonomous system conserves energy outright
    const auto tr = integrate(harmonic(1.0, 0.0), {1.0, 0}, {0.0, 0}, 0.0, 1.0, cfg);
    CHECK(hamiltonian_drift(tr, harmonic(1.0, 0.0)) < 1e-10);
    for (size_t i = 0; i < tr.size(); i += 200)
        CHECK(std::abs(tr.H[i] - tr.H[0]) < 1e-10);
}

TEST_CASE("movable singularities stop the integration cleanly") {
    // strong attraction toward the inverse-square wall
    const auto spec = p5_hamiltonian(1.2, -0.2, -0.06, -0.5);
    IntegratorConfig cfg;
    cfg.h = 1e-3;
    bool thrown = false;
    try {
        integrate(spec, {0.55, 0}, {0.2, 0}, 0.0, 0.7, cfg);
    } catch (const singularity_approach_error& e) {
        thrown = true;
        CHECK(std::abs(e.last_u) > 0.04);
        CHECK(std::abs(e.last_u) < 0.15);
        CHECK(e.last_t > 0.0);
        CHECK(e.last_t < 0.7);
    }
    CHECK(thrown);
    CHECK_THROWS_AS(integrate(spec, {0.01, 0}, {0.0, 0}, 0.0, 0.1, cfg),
                    singularity_approach_error);
}

TEST_CASE("configuration is validated") {
    IntegratorConfig cfg;
    cfg.h = -1.0;
    CHECK_THROWS_AS(integrate(p1_hamiltonian(), {0.7, 0}, {0.1, 0}, 0.0, 1.0, cfg), config_error);
}

TEST_CASE("trajectory interpolation") {
    IntegratorConfig cfg;
    cfg.h = 1e-3;
    const auto tr = integrate(harmonic(1.0, 0.0), {1.0, 0}, {0.0, 0}, 0.0, 1.0, cfg);
    for (double t : {0.1234, 0.5017, 0.8765}) {
        CHECK(std::abs(tr.u_at(t) - std::cos(std::sqrt(2.0) * t)) < 1e-9);
        CHECK(std::abs(tr.v_at(t) + std::sqrt(2.0) * std::sin(std::sqrt(2.0) * t)) < 1e-9);
    }
    CHECK_THROWS_AS(tr.u_at(1.5), step_failure_error);
}

TEST_CASE("third-family force in the four-parameter form") {
    const double al = 0.8, be = -0.3, ga = 0.5, de = 0.2, u = 0.45, t = 0.3;
    const double expected = 0.5 * (std::exp(t) * (al * std::exp(2 * u) + be * std::exp(-2 * u)) +
                                   std::exp(2 * t) * (ga * std::exp(4 * u) + de * std::exp(-4 * u)));
    CHECK(force(p3_hamiltonian(al, be, ga, de), u, t).real() == doctest::Approx(expected));
}
