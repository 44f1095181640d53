#include <doctest.h>

#include "painlab/potentials.hpp"
#include "painlab/serialize.hpp"

using namespace painlab;

TEST_CASE("catalog point values") {
    CHECK(eval_V(p1_classification(), 1.0, 0.0).real() == doctest::Approx(1.0));
    CHECK(eval_V(p2_classification(0.0), 2.0, 1.0).real() == doctest::Approx(20.0));
    CHECK(eval_V(harmonic(1.5, -2.0), 3.0, 0.7).real() == doctest::Approx(1.5 * 9 - 6.0));
    // quartic-over-square catalog entry
    CHECK(eval_V(p4_classification(0.25, 0.5), 2.0, 0.5).real() ==
          doctest::Approx(64.0 + 4.0 * 0.5 * 16.0 + (4.0 * 0.25 + 0.25) * 4.0 + 0.125));
}

TEST_CASE("derivatives are analytic and consistent") {
    const double t = 0.37;
    const cplx x(0.83, 0.21);
    for (const PotentialSpec& s :
         {p1_classification(), p2_classification(0.7), p4_classification(0.35, 0.41),
          p4_quartic(-0.5), calogero2(0.9, 0.27), p3_classification(0.2, -0.35, 0.81, 0.44),
          p5_classification(0.3, 0.45, 0.25), p1_hamiltonian(), p2_hamiltonian(0.4),
          p4_hamiltonian(0.3, 0.7), p5_hamiltonian(0.4, -0.3, 0.6, 0.2),
          p3_hamiltonian(0.8, -0.3, 0.5, 0.2), p6(0.31, -0.22, 0.47, 0.16)}) {
        const double tt = (s.family == Family::P6) ? 0.2 : t;
        const cplx fd = central_diff([&](cplx xx) { return eval_V(s, xx, tt); }, x, 1e-5);
        CHECK(std::abs(eval_dVdx(s, x, tt) - fd) < 1e-6);
        for (int n = 2; n <= 5; ++n) {
            const cplx fdn = richardson_diff(
                [&](cplx xx) { return eval_dnVdx(s, n - 1, xx, tt); }, x, 1e-4, 2);
            CHECK(std::abs(eval_dnVdx(s, n, x, tt) - fdn) / std::max(1.0, std::abs(fdn)) < 1e-6);
        }
        const cplx ft =
            richardson_diff([&](cplx ttt) { return eval_V(s, x, ttt); }, cplx(tt), 1e-3, 2);
        CHECK(std::abs(eval_dVdt(s, x, tt) - ft) < 1e-7);
        const cplx fxt =
            richardson_diff([&](cplx ttt) { return eval_dVdx(s, x, ttt); }, cplx(tt), 1e-3, 2);
        CHECK(std::abs(eval_dnVdxdt(s, 1, x, tt) - fxt) < 1e-6);
    }
}

TEST_CASE("even families stay even") {
    const double t = 0.42;
    const cplx x(0.61, -0.37);
    for (const PotentialSpec& s : {p4_classification(0.35, 0.41), p4_quartic(-0.5),
                                   calogero2(0.9, 0.27), p5_hamiltonian(0.4, -0.3, 0.6, 0.2)})
        CHECK(std::abs(eval_V(s, -x, t) - eval_V(s, x, t)) < 1e-12);
    const PotentialSpec s6 = p6(0.31, -0.22, 0.47, 0.16);
    CHECK(std::abs(eval_V(s6, -x * 0.4, 0.2) - eval_V(s6, x * 0.4, 0.2)) < 1e-10);
}

TEST_CASE("quantum shifts") {
    const auto p5 = quantum_shift(p5_hamiltonian(1.0, 0.0, 2.0, 0.5));
    CHECK(p5.p("alpha") == doctest::Approx(7.0 / 8.0));
    CHECK(p5.p("beta") == doctest::Approx(1.0 / 8.0));
    CHECK(p5.p("gamma") == doctest::Approx(2.0));
    CHECK(p5.p("delta") == doctest::Approx(0.5));
    CHECK(p5.quantum);
    const auto p4 = quantum_shift(p4_hamiltonian(0.0, 0.0));
    CHECK(p4.p("alpha") == doctest::Approx(0.0));
    CHECK(p4.p("beta") == doctest::Approx(0.5));
    const auto p1 = quantum_shift(p1_classification());
    CHECK(p1.params.empty());
    const auto p6s = quantum_shift(p6(0.5, 0.5, 0.5, 0.5));
    CHECK(p6s.p("alpha") == doctest::Approx(0.375));
    CHECK(p6s.p("beta") == doctest::Approx(0.625));
    CHECK(p6s.p("gamma") == doctest::Approx(0.375));
    CHECK(p6s.p("delta") == doctest::Approx(0.625));
    // classification-normalized quartic shift is the same statement
    const auto p4c = quantum_shift(p4_classification(0.3, 0.41));
    CHECK(p4c.p("nu") == doctest::Approx(0.41 + 0.125));
}

TEST_CASE("parameterization conversions") {
    // classification vs Hamiltonian quartic-sextic forms differ by -1/8
    const auto cls = p4_classification(0.3, 0.41);
    const auto ham = p4_to_hamiltonian(cls);
    const cplx x(0.8, 0.1);
    CHECK(std::abs(eval_V(ham, x, 0.4) + eval_V(cls, x, 0.4) / 8.0) < 1e-13);
    const auto back = p4_to_classification(ham);
    CHECK(back.p("alpha2") == doctest::Approx(0.3));
    CHECK(back.p("nu") == doctest::Approx(0.41));
    // hyperbolic two-zero forms coincide under the stated dictionary
    const auto p5c = p5_classification(0.3, 0.45, 0.25);
    const auto p5h = p5_to_hamiltonian(p5c);
    CHECK(std::abs(eval_V(p5h, x, 0.4) - eval_V(p5c, x, 0.4)) < 1e-12);
    // (nu, mu, rho) Hamiltonian form
    const double nu = 0.7, mu = 0.4, rho = 0.3;
    const auto p3 = p3_hamiltonian_from_nmr(nu, mu, rho);
    const cplx direct = -nu * nu * std::exp(0.4) * std::cosh(2.0 * x - 2.0 * rho) -
                        mu * mu * std::exp(0.8) * std::cosh(4.0 * x);
    CHECK(std::abs(eval_V(p3, x, 0.4) - direct) < 1e-12);
}

TEST_CASE("coordinate maps") {
    // identity maps
    const auto m1 = coordinate_map(Family::P1, MapVar::DynamicalU, cplx(0.7, 0.0), 0.3);
    CHECK(m1.value == cplx(0.7, 0.0));
    CHECK(m1.T == cplx(0.3));
    // the hyperbolic squared-cotangent map
    const auto m5 = coordinate_map(Family::P5, MapVar::DynamicalU, cplx(1.0, 0.0), 0.0);
    const double coth1 = std::cosh(1.0) / std::sinh(1.0);
    CHECK(m5.value.real() == doctest::Approx(coth1 * coth1).epsilon(1e-12));
    CHECK(m5.T.real() == doctest::Approx(1.0));
    const auto m5x = coordinate_map(Family::P5, MapVar::SpectralX, cplx(1.0, 0.0), 0.0);
    CHECK(m5x.value.real() == doctest::Approx(std::cosh(1.0) * std::cosh(1.0)).epsilon(1e-12));
    // inverses on the principal branch
    CHECK(std::abs(inverse_coordinate_map(Family::P5, MapVar::DynamicalU, m5.value, 0.0) - 1.0) <
          1e-12);
    CHECK(std::abs(inverse_coordinate_map(Family::P5, MapVar::SpectralX, m5x.value, 0.0) - 1.0) <
          1e-12);
    CHECK_THROWS_AS(inverse_coordinate_map(Family::P5, MapVar::DynamicalU, cplx(0.5, 0.0), 0.0),
                    branch_error);
    // elliptic map obeys its quartic derivative identity
    const double t = 0.2;
    EllipticContext ctx(tau_from_t(cplx(t)));
    const cplx x(0.31, 0.22);
    const auto m6 = coordinate_map(Family::P6, MapVar::SpectralX, x, t);
    const cplx Xx = map_X_dx(x, ctx);
    const cplx res = Xx * Xx - 4.0 * (ctx.e[1] - ctx.e[0]) * m6.value * (m6.value - 1.0) *
                                    (m6.value - m6.T);
    CHECK(std::abs(res) < 1e-8);
}

TEST_CASE("elliptic potential matches its rational form") {
    // wp-shift combination against the a X + b/X + c/(X-1) + d/(X-T) form;
    // the third coefficient enters with the opposite sign of the shift
    // coefficient, fixed by the half-period partial fractions.
    const double t = 0.2, al = 0.31, be = -0.22, ga = 0.47, de = 0.16;
    EllipticContext ctx(tau_from_t(cplx(t)));
    const cplx T = modulus_T(ctx), dE = ctx.e[1] - ctx.e[0];
    const auto s = p6(al, be, ga, de);
    const cplx x(0.27, 0.31);
    const cplx X = map_X(x, ctx);
    const cplx rational = al * dE * X + be * dE * T / X + (-ga) * dE * (T - 1.0) / (X - 1.0) +
                          de * dE * T * (T - 1.0) / (X - T);
    const cplx offset = al * ctx.e[0] + be * ctx.e[0] + ga * ctx.e[1] + de * ctx.e[2];
    CHECK(std::abs(eval_V(s, x, t, &ctx) - (rational + offset)) < 1e-8);
}

TEST_CASE("singular set guards") {
    CHECK_THROWS_AS(eval_V(p4_classification(0.3, 0.4), cplx(0.0, 0.0), 0.3), singularity_error);
    CHECK_THROWS_AS(eval_V(p5_hamiltonian(0.4, -0.3, 0.6, 0.2), cplx(0.0, 0.0), 0.3),
                    singularity_error);
    // cosh x = 0 at i pi / 2
    CHECK_THROWS_AS(eval_V(p5_hamiltonian(0.4, -0.3, 0.6, 0.2), cplx(0.0, pi / 2.0), 0.3),
                    singularity_error);
    CHECK_THROWS_AS(eval_V(p6(1, 0, 0, 0), cplx(1e-5, 0.0), 0.2), singularity_error);
    PotentialSpec bad = p1_classification();
    bad.family = static_cast<Family>(250);
    CHECK_THROWS(eval_V(bad, 1.0, 0.0));
}

TEST_CASE("json round trip") {
    const auto s = p5_classification(0.3, 0.45, 0.25);
    const auto j = to_json(s);
    CHECK(j.at("family") == "p5");
    CHECK(j.at("normalization") == "classification");
    CHECK(j.at("quantum") == false);
    const auto back = spec_from_json(j);
    CHECK(back.family == Family::P5);
    CHECK(back.p("xi") == doctest::Approx(0.3));
    const auto qs = quantum_shift(p4_hamiltonian(0.1, 0.2));
    const auto back2 = spec_from_json(to_json(qs));
    CHECK(back2.quantum);
    CHECK(back2.p("beta") == doctest::Approx(0.7));
}
