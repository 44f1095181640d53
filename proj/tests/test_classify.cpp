#include <doctest.h>

#include "painlab/classify.hpp"
#include "painlab/dynamics.hpp"

using namespace painlab;

TEST_CASE("rational one-zero classification") {
    const auto r = solve_constraints(ClassifyCase::RatOne);
    REQUIRE(r.families.size() == 3);
    CHECK(r.families[0].name == "harmonic");
    CHECK(r.families[1].name == "p1");
    CHECK(r.families[1].odes == std::vector<std::string>{"adot1 = 1/2"});
    CHECK(r.families[2].name == "p2");
    CHECK(r.families[2].odes == std::vector<std::string>{"adot2 = 1", "adot1 = 0"});
    // the reduced constraint rows are exact
    CHECK(r.constraints == std::vector<std::string>{"adot4 = 0", "adot3 = 0", "adot2-a4 = 0",
                                                    "adot1-1/2*a3 = 0"});
}

TEST_CASE("quadratic ansatz forces constant coefficients") {
    auto id = build_cleared_identity(ClassifyCase::RatOne, 4);
    // pin a3 = a4 = 0 (and their rates); the survivors force adot2 = adot1 = 0
    BivariatePoly sub;
    for (const auto& [p, f] : id.terms) {
        LinForm g = f;
        for (const Sym s : {Sym{4, false}, Sym{4, true}, Sym{3, false}, Sym{3, true}})
            g = g.substituted(s, Rational(0));
        sub.add(p.first, p.second, g);
    }
    ConstraintSystem cs;
    for (const auto& [p, f] : sub.terms) cs.rows.push_back(f);
    cs.reduce();
    CHECK(cs.printed() == std::vector<std::string>{"adot2 = 0", "adot1 = 0"});
}

TEST_CASE("cubic ansatz residual factorizes") {
    // with a3 = 1 and the quadratic/quartic directions pinned, the cleared
    // identity collapses to (2 adot1 - 1)(x - u)^3
    auto id = build_cleared_identity(ClassifyCase::RatOne, 4);
    BivariatePoly sub;
    for (const auto& [p, f] : id.terms) {
        LinForm g = f;
        g = g.substituted({4, false}, Rational(0)).substituted({4, true}, Rational(0));
        g = g.substituted({3, false}, Rational(1)).substituted({3, true}, Rational(0));
        g = g.substituted({2, false}, Rational(0)).substituted({2, true}, Rational(0));
        sub.add(p.first, p.second, g);
    }
    const int binom[4] = {1, -3, 3, -1}; // (x-u)^3 alternating coefficients
    int checked = 0;
    for (const auto& [p, f] : sub.terms) {
        REQUIRE(p.first + p.second == 3);
        LinForm expect;
        expect.add({1, true}, Rational(2 * binom[p.second]));
        expect.constant = Rational(-binom[p.second]);
        CHECK(f.str() == expect.str());
        ++checked;
    }
    CHECK(checked == 4);
}

TEST_CASE("rational two-zero classification") {
    const auto r = solve_constraints(ClassifyCase::RatTwo);
    REQUIRE(r.families.size() == 3);
    CHECK(r.families[0].name == "p4");
    CHECK(r.families[0].odes == std::vector<std::string>{"mudot = 0", "nudot = 0", "adot4 = 4*mu",
                                                         "adot2 = 2*a4"});
    CHECK(r.families[0].coefficients[0] == "a4 = 4*mu*t + alpha4");
    CHECK(r.families[0].coefficients[1] == "a2 = 4*mu*t^2 + 2*alpha4*t + alpha2");
    CHECK(r.families[1].name == "p4-quartic");
    CHECK(r.families[2].name == "calogero2");
    CHECK(r.constraints == std::vector<std::string>{"adot6 = 0", "adot4-4*a6 = 0",
                                                    "adot2-2*a4 = 0", "adot-2 = 0"});
}

TEST_CASE("hyperbolic one-zero classification") {
    const auto r = solve_constraints(ClassifyCase::HypOne);
    REQUIRE(r.families.size() == 1);
    CHECK(r.families[0].odes == std::vector<std::string>{"adot4 = 2*a4", "adot3 = 1*a3",
                                                         "adot1 = 1*a1", "adot0 = 2*a0"});
    CHECK(r.families[0].free_params == 4);
}

TEST_CASE("hyperbolic two-zero heat exponents") {
    const auto r = solve_constraints(ClassifyCase::HypTwo);
    CHECK(r.hyp_two_exponents == std::vector<int>{0, 2, 4});
    REQUIRE(r.families.size() == 3);
    CHECK(r.families[0].free_params == 3); // two pole terms and the constant
    CHECK(r.families[1].free_params == 2);
    CHECK(r.families[2].free_params == 2);
}

TEST_CASE("degree bounds are tight") {
    auto id = build_cleared_identity(ClassifyCase::RatOne, 6);
    auto sys = full_constraints(id, "deg6");
    bool a5 = false, a6 = false;
    for (const auto& row : sys.rows) {
        if (row.str() == "a5") a5 = true;
        if (row.str() == "a6") a6 = true;
    }
    CHECK(a5);
    CHECK(a6);
    CHECK_THROWS_AS(build_cleared_identity(ClassifyCase::RatOne, 3), degree_overflow_error);
}

TEST_CASE("derivative annihilation shortcut matches the full system") {
    auto id = build_cleared_identity(ClassifyCase::RatOne, 4);
    const auto full = full_constraints(id, "full");
    const auto da = derivative_annihilation(ClassifyCase::RatOne, id);
    CHECK(full.printed() == da.printed());
    // the higher-derivative shortcut yields necessary conditions; joining
    // them to the full system must not add anything new
    auto id2 = build_cleared_identity(ClassifyCase::HypOne, 4);
    const auto full2 = full_constraints(id2, "full");
    auto da2 = derivative_annihilation(ClassifyCase::HypOne, id2);
    ConstraintSystem joined = full2;
    for (const auto& row : da2.rows) joined.rows.push_back(row);
    joined.reduce();
    CHECK(joined.printed() == full2.printed());
}

TEST_CASE("inconsistent systems are reported") {
    ConstraintSystem cs;
    LinForm bad;
    bad.constant = Rational(1);
    cs.rows.push_back(bad);
    CHECK_THROWS_AS(cs.reduce(), config_error);
}

TEST_CASE("elliptic coefficient odes") {
    const auto r = verify_elliptic_coefficient_odes({0.15, 0.18, 0.21, 0.25, 0.30});
    CHECK(r.max_ode_residual < 1e-6);
    CHECK(r.max_modulus_residual < 1e-6);
}

TEST_CASE("elliptic one-zero equation has only trivial solutions") {
    const auto r = elliptic_one_zero_triviality(0.2, 24);
    CHECK(r.constant_residual < 1e-10);
    CHECK(r.wp_min_residual > 1e-2);
    // the necessary periodicity condition alone does not rescue the
    // double-periodic candidate
    CHECK(r.periodicity_residual < 1e-9);
}

TEST_CASE("quartic inverse-square family rides the second transcendent") {
    // along a trajectory of uddot = -4u^3 - 4tu + 2 nu/u^3, the combination
    // y = (sqrt(-32 nu) + 4 u udot) / (8 u^2) obeys
    //   ydot = -2 (u^2 + y^2 + t)  and  yddot = 8y^3 + 8ty + sqrt(-32 nu) - 2.
    const double nu = -0.5, c = std::sqrt(-32.0 * nu);
    PotentialSpec spec = p4_quartic(nu);
    IntegratorConfig cfg;
    cfg.h = 5e-4;
    const auto tr = integrate(spec, {0.7, 0.0}, {0.1, 0.0}, 0.0, 0.4, cfg);
    auto y_at = [&](double t) {
        const cplx u = tr.u_at(t), v = tr.v_at(t);
        return (c + 4.0 * u * v) / (8.0 * u * u);
    };
    double worst1 = 0, worst2 = 0;
    for (double t : {0.05, 0.12, 0.2, 0.3, 0.35}) {
        const double h = 5e-3; // wide stencils keep the interpolation noise down
        const cplx yd = (y_at(t + h) - y_at(t - h)) / (2.0 * h);
        const cplx u = tr.u_at(t);
        worst1 = std::max(worst1, std::abs(yd + 2.0 * (u * u + y_at(t) * y_at(t) + t)));
        const cplx ydd = (y_at(t + h) - 2.0 * y_at(t) + y_at(t - h)) / (h * h);
        const cplx y = y_at(t);
        worst2 = std::max(worst2, std::abs(ydd - (8.0 * y * y * y + 8.0 * t * y + c - 2.0)));
    }
    CHECK(worst1 < 1e-3);
    CHECK(worst2 < 1e-2);
}

TEST_CASE("hyperbolic one-zero ansatz admits no inverse power") {
    // extend the exponential-variable ansatz downward by one power and let
    // the system kill it: the cleared identity, multiplied once by x u to
    // stay polynomial, forces the inverse coefficient to vanish.
    auto Vx = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 0);
    auto Vu = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 1);
    auto Vpx = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 2);
    auto Vpu = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 3);
    auto Vtx = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 4);
    auto Vtu = detail::ansatz_poly({-1, 0, 1, 2, 3, 4}, 5);
    using detail::Known;
    const Rational one(1);
    Known sq{{one, 2, 0}, {Rational(-2), 1, 1}, {one, 0, 2}};
    BivariatePoly t1 = Vtx.mono_mul(one, 0, 2);
    t1 += Vtu.mono_mul(Rational(-1), 2, 0);
    t1 = t1.poly_mul(sq);
    Known cube{{one, 3, 1}, {Rational(-1), 1, 3}};
    BivariatePoly t2 = Vpx.mono_mul(one, 0, 1);
    t2 += Vpu.mono_mul(one, 1, 0);
    t2 = t2.poly_mul(cube).mono_mul(Rational(-1), 0, 0);
    Known disc{{one, 2, 0}, {Rational(-1), 0, 2}};
    BivariatePoly t3 = Vx.mono_mul(one, 0, 2);
    t3 += Vu.mono_mul(one, 2, 0);
    t3 = t3.poly_mul(disc).mono_mul(Rational(2), 0, 0);
    BivariatePoly t4 = Vx.mono_mul(one, 0, 2);
    t4 += Vu.mono_mul(Rational(-1), 2, 0);
    t4 = t4.mono_mul(Rational(4), 1, 1);
    BivariatePoly r = t1;
    r += t2;
    r += t3;
    r += t4;
    r = r.mono_mul(one, 1, 1);
    r.assert_polynomial();
    ConstraintSystem cs;
    for (const auto& [p, f] : r.terms) cs.rows.push_back(f);
    cs.reduce();
    bool inverse_killed = false;
    for (const auto& row : cs.rows)
        if (row.str() == "a-1") inverse_killed = true;
    CHECK(inverse_killed);
}
