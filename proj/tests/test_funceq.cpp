#include <doctest.h>

#include "painlab/funceq.hpp"

using namespace painlab;

namespace {
double pair_residual(const PotentialSpec& s, BShape sh, int n = 25) {
    BKind bk{sh, gauge_none()};
    double worst = 0;
    for (int i = 0; i < n; ++i) {
        const double t = 0.2 + 0.013 * i;
        const cplx x(0.6 + 0.021 * i, 0.31 - 0.007 * i), u(-0.4 + 0.017 * i, -0.22 + 0.009 * i);
        const cplx r = bk.two_zero() ? residual_two_zero(s, bk, x + 0.4, -u, t)
                                     : residual_one_zero(s, bk, x, u, t);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}
} // namespace

TEST_CASE("master equations annihilate the catalog") {
    CHECK(pair_residual(p1_classification(), BShape::RatOne) < 1e-12);
    CHECK(pair_residual(p1_hamiltonian(), BShape::RatOne) < 1e-12);
    CHECK(pair_residual(p2_classification(0.7), BShape::RatOne) < 1e-12);
    CHECK(pair_residual(harmonic(1.3, -0.7), BShape::RatOne) < 1e-12);
    CHECK(pair_residual(p3_classification(0.2, -0.35, 0.81, 0.44), BShape::HypOne) < 1e-11);
    CHECK(pair_residual(p3_hamiltonian(0.8, -0.3, 0.5, 0.2), BShape::HypOne) < 1e-11);
    CHECK(pair_residual(p4_classification(0.35, 0.41), BShape::RatTwo) < 1e-9);
    CHECK(pair_residual(p4_hamiltonian(0.3, 0.7), BShape::RatTwo) < 1e-9);
    CHECK(pair_residual(p4_quartic(-0.5), BShape::RatTwo) < 1e-9);
    CHECK(pair_residual(calogero2(0.9, 0.27), BShape::RatTwo) < 1e-9);
    CHECK(pair_residual(p5_classification(0.3, 0.45, 0.25), BShape::HypTwo) < 1e-8);
    CHECK(pair_residual(p5_hamiltonian(0.4, -0.3, 0.6, 0.2), BShape::HypTwo) < 1e-8);
}

TEST_CASE("theta-shape pairing") {
    const auto s = p6(0.31, -0.22, 0.47, 0.16);
    BKind bk{BShape::ThetaTwo, gauge_none()};
    double worst = 0;
    for (int i = 0; i < 20; ++i) {
        const double t = 0.14 + 0.006 * i;
        EllipticContext ctx(tau_from_t(cplx(t)));
        const cplx x = from_lattice_coords(0.23 + 0.02 * i, 0.31, ctx);
        const cplx u = from_lattice_coords(0.71 - 0.013 * i, 0.67, ctx);
        worst = std::max(worst, std::abs(residual_two_zero(s, bk, x, u, t, &ctx)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("mismatched pairings are rejected loudly") {
    CHECK(pair_residual(p1_classification(), BShape::RatTwo) > 1e-2);
    CHECK(pair_residual(p4_classification(0.35, 0.41), BShape::HypTwo) > 1e-2);
}

TEST_CASE("constant potentials satisfy everything") {
    PotentialFn constant{[](cplx, double) { return cplx(3.7); },
                         [](cplx, double) { return cplx(0.0); },
                         [](cplx, double) { return cplx(0.0); }};
    for (BShape sh : {BShape::RatTwo, BShape::HypTwo}) {
        BKind bk{sh, gauge_none()};
        CHECK(std::abs(residual_two_zero(constant, bk, cplx(0.9, 0.1), cplx(0.4, -0.2), 0.3)) <
              1e-14);
    }
}

TEST_CASE("additive time-dependent terms drop out") {
    const auto base = make_potential_fn(p2_classification(0.7));
    PotentialFn shifted{
        [&](cplx x, double t) { return base.V(x, t) + cplx(2.1 * t * t - 0.3); },
        base.Vx,
        [&](cplx x, double t) { return base.Vt(x, t) + cplx(4.2 * t); }};
    BKind bk{BShape::RatOne, gauge_none()};
    const cplx x(0.8, 0.2), u(-0.5, 0.1);
    CHECK(std::abs(residual_one_zero(shifted, bk, x, u, 0.4) -
                   residual_one_zero(base, bk, x, u, 0.4)) < 1e-13);
}

TEST_CASE("heat residuals per shape") {
    CHECK(std::abs(heat_residual(BShape::RatOne, cplx(0.7, 0.2), 0.3)) == 0.0);
    CHECK(std::abs(heat_residual(BShape::HypOne, cplx(0.7, 0.2), 0.3)) < 1e-9);
    CHECK(std::abs(heat_residual(BShape::ThetaOne, cplx(0.3, 0.2), 0.2)) < 1e-7);
}

TEST_CASE("expansion coefficients") {
    const auto rat = f_expansion(BShape::RatOne, 0.3);
    CHECK(std::abs(rat.c1) == 0.0);
    CHECK(std::abs(rat.c3) == 0.0);
    // least-squares fit near zero as the independent route
    const auto hyp_fit = fit_expansion(BShape::HypOne, 0.3);
    CHECK(std::abs(hyp_fit.c1 - 1.0 / 3.0) < 1e-9);
    CHECK(std::abs(hyp_fit.c3 + 1.0 / 45.0) < 1e-7);
    const double t = 0.22;
    EllipticContext ctx(tau_from_t(cplx(t)));
    const auto th = f_expansion(BShape::ThetaOne, t, &ctx);
    CHECK(std::abs(th.c1 + 2.0 * ctx.eta) < 1e-12);
    const auto th_fit = fit_expansion(BShape::ThetaOne, t);
    CHECK(std::abs(th.c1 - th_fit.c1) < 1e-8);
    CHECK(std::abs(th.c3 - th_fit.c3) < 1e-6);
}

TEST_CASE("local expansion consequences") {
    // cubic catalog entry: both sides equal 1/2
    const auto le1 = local_expansion_residuals(p1_classification(), {BShape::RatOne, gauge_none()},
                                               cplx(0.9, 0.1), 0.4);
    CHECK(std::abs(le1.first_order) < 1e-12);
    CHECK(std::abs(le1.fifth_order) < 1e-12);
    // quartic: both sides equal 2x
    const auto le2 = local_expansion_residuals(p2_classification(0.7), {BShape::RatOne, gauge_none()},
                                               cplx(0.9, 0.1), 0.4);
    CHECK(std::abs(le2.first_order) < 1e-12);
    // two-zero families, including the combined x-independent relation
    for (const auto& [spec, shape] :
         std::vector<std::pair<PotentialSpec, BShape>>{{p4_classification(0.35, 0.41), BShape::RatTwo},
                                                       {p5_hamiltonian(0.4, -0.3, 0.6, 0.2), BShape::HypTwo}}) {
        const auto le = local_expansion_residuals(spec, {shape, gauge_none()}, cplx(0.9, 0.1), 0.4);
        CHECK(std::abs(le.first_order) < 1e-10);
        CHECK(std::abs(le.fifth_order) < 1e-10);
        CHECK(std::abs(le.const_check) < 1e-10);
    }
    const auto le6 = local_expansion_residuals(p6(0.31, -0.22, 0.47, 0.16),
                                               {BShape::ThetaTwo, gauge_none()}, cplx(0.41, 0.13), 0.2);
    CHECK(std::abs(le6.first_order) < 1e-9);
    CHECK(std::abs(le6.fifth_order) < 1e-7);
    CHECK(std::abs(le6.const_check) < 1e-7);
}

TEST_CASE("shifted-argument lemma for heat-flow log-derivatives") {
    for (BShape sh : {BShape::RatOne, BShape::HypOne}) {
        CHECK(std::abs(lemma_shift_residual(sh, cplx(0.7, 0.2), cplx(0.3, -0.1), 0.3)) < 1e-12);
    }
    CHECK(std::abs(lemma_shift_residual(BShape::ThetaOne, cplx(0.41, 0.2), cplx(0.2, -0.11), 0.21)) <
          1e-11);
}

TEST_CASE("exponent admissibility") {
    CHECK(exponent_admissibility(1.0).admissible);
    CHECK_FALSE(exponent_admissibility(3.0).admissible); // quartic passes, cubic fails
    CHECK(std::abs(exponent_admissibility(3.0).certificate[0].second) < 1e-14);
    CHECK(std::abs(exponent_admissibility(3.0).certificate[1].second - cplx(6.0)) < 1e-14);
    const auto g2 = exponent_admissibility(2.0);
    CHECK_FALSE(g2.admissible);
    CHECK(g2.certificate[0].second.real() == doctest::Approx(-0.5));
    CHECK_FALSE(exponent_admissibility(0.0).admissible); // trivial zero-free case
    CHECK(exponent_admissibility(1.0, cplx(1.0)).admissible);
    CHECK_FALSE(exponent_admissibility(1.0, cplx(3.0)).admissible);
}

TEST_CASE("factorization checks") {
    auto prod = [](cplx x, cplx u) { return (x - u) * (x + u); };
    CHECK(std::abs(factorization_residual(prod, cplx(0.8, 0.1), cplx(0.3, -0.2))) < 1e-6);
    EllipticContext ctx(tau_from_t(cplx(0.2)));
    auto theta_prod = [&](cplx x, cplx u) { return theta(1, x - u, ctx) * theta(1, x + u, ctx); };
    CHECK(std::abs(factorization_residual(theta_prod, cplx(0.31, 0.12), cplx(0.11, -0.22))) < 1e-6);
    auto no_factor = [](cplx x, cplx u) { return x * x * u + u * u + 1.0; };
    CHECK(std::abs(factorization_residual(no_factor, cplx(0.8, 0.1), cplx(0.3, -0.2))) > 1e-3);
    auto vanishing = [](cplx, cplx) { return cplx(0.0); };
    CHECK_THROWS_AS(factorization_residual(vanishing, cplx(0.8, 0.1), cplx(0.3, -0.2)),
                    grid_degeneracy_error);
    // three independent zeros cannot satisfy the double-pole conditions
    CHECK(triple_zero_obstruction(cplx(0.5, 0.1), cplx(-0.3, 0.2), cplx(1.1, -0.4)) ==
          doctest::Approx(0.5));
}

TEST_CASE("gauge transforms") {
    const auto spec = p2_classification(0.7);
    // identity gauge
    {
        BKind none{BShape::RatOne, gauge_none()};
        auto tr = gauge_transform(none, spec);
        const cplx x(0.9, 0.2), u(-0.3, 0.1);
        CHECK(std::abs(tr.point_map(x, 0.5) - x) == 0.0);
        CHECK(std::abs(residual_one_zero(tr.transformed, tr.plain, x, u, 0.5) -
                       residual_one_zero(spec, none, x, u, 0.5)) < 1e-14);
    }
    // linear gauge with constant g: pure argument drift
    {
        BKind gk{BShape::RatOne, gauge_linear_const(0.6)};
        auto tr = gauge_transform(gk, spec);
        for (double t : {0.2, 0.5, 0.9}) {
            const cplx x(0.9, 0.2), u(-0.3, 0.1);
            const cplx rg = residual_one_zero(make_potential_fn(spec), gk, x, u, t);
            const cplx rp =
                residual_one_zero(tr.transformed, tr.plain, tr.point_map(x, t), tr.point_map(u, t), t);
            CHECK(std::abs(rg - rp) < 1e-10);
        }
    }
    // quadratic gauge with constant g: drift, dilation and a time rescale
    {
        BKind gk{BShape::RatOne, gauge_quadratic_const(0.35)};
        auto tr = gauge_transform(gk, spec);
        for (double t : {0.2, 0.4, 0.7}) {
            const cplx x(0.9, 0.2), u(-0.3, 0.1);
            const cplx rg = residual_one_zero(make_potential_fn(spec), gk, x, u, t);
            const cplx rp = residual_one_zero(tr.transformed, tr.plain, tr.point_map(x, t),
                                              tr.point_map(u, t), tr.theta_of_t(t));
            CHECK(std::abs(rp - tr.residual_scale(t) * rg) < 1e-8);
        }
        // closed-form solution family of the gauged equation
        const double g0 = 0.35, C = 0.8;
        PotentialFn cf{
            [=](cplx xx, double tt) { return (C * std::exp(4 * g0 * tt) - g0 * g0 / 2.0) * xx * xx; },
            [=](cplx xx, double tt) { return 2.0 * (C * std::exp(4 * g0 * tt) - g0 * g0 / 2.0) * xx; },
            [=](cplx xx, double tt) { return 4.0 * g0 * C * std::exp(4 * g0 * tt) * xx * xx; }};
        CHECK(std::abs(residual_one_zero(cf, gk, cplx(0.9, 0.2), cplx(-0.3, 0.1), 0.4)) < 1e-12);
    }
    // unsupported combinations
    BKind hyp_gauged{BShape::HypOne, gauge_linear_const(0.3)};
    CHECK_THROWS_AS(residual_one_zero(spec, hyp_gauged, cplx(0.9), cplx(-0.3), 0.3),
                    unsupported_gauge_error);
}

TEST_CASE("pole-expansion momentum for the linear gauge") {
    // b = (x-u) e^{g x}: extract the expansion coefficients numerically and
    // check the momentum combination collapses to udot + g/2.
    const double g = 0.6, h = 1e-4;
    const cplx u(0.55, -0.15), udot(0.37, 0.0);
    auto b = [&](cplx x, cplx uu) { return (x - uu) * std::exp(g * x); };
    auto b1_of = [&](cplx uu) {
        return (b(uu + h, uu) - b(uu - h, uu)) / (2.0 * h);
    };
    const cplx b1 = b1_of(u);
    const cplx b2 = 0.5 * (b(u + h, u) - 2.0 * b(u, u) + b(u - h, u)) / (h * h);
    const cplx b1p = (b1_of(u + h) - b1_of(u - h)) / (2.0 * h);
    const cplx v = udot + b2 / b1 - b1p / (2.0 * b1);
    CHECK(std::abs(v - (udot + g / 2.0)) < 1e-8);
}

TEST_CASE("classical-quantum correction") {
    const double t = 0.3;
    const cplx u(0.4, 0.1);
    for (BShape sh : {BShape::RatTwo, BShape::HypTwo, BShape::ThetaTwo}) {
        const cplx fd = 0.5 * richardson_diff2(
                                  [&](cplx zz) { return std::log(b_of(sh, zz, t) / b_of(sh, 2.0 * u, t)); },
                                  2.0 * u, 1e-3);
        CHECK(std::abs(fd - classical_quantum_correction(sh, u, t)) < 1e-8);
    }
    CHECK(std::abs(classical_quantum_correction(BShape::RatOne, u, t)) == 0.0);
}

TEST_CASE("two-zero residual is even in the dynamical point for even potentials") {
    const auto s = p4_classification(0.35, 0.41);
    BKind bk{BShape::RatTwo, gauge_none()};
    const cplx x(0.9, 0.2), u(0.4, -0.15);
    CHECK(std::abs(residual_two_zero(s, bk, x, u, 0.4) - residual_two_zero(s, bk, x, -u, 0.4)) <
          1e-13);
    const auto s5 = p5_hamiltonian(0.4, -0.3, 0.6, 0.2);
    BKind b5{BShape::HypTwo, gauge_none()};
    CHECK(std::abs(residual_two_zero(s5, b5, x, u, 0.4) - residual_two_zero(s5, b5, x, -u, 0.4)) <
          1e-12);
}

TEST_CASE("local-expansion right sides are full derivatives") {
    // first-order relation: RHS equals d/dx of V''/12 + 2 c1 V + f(2x) V'/2;
    // third-order: RHS equals d/dx of the longer bracket.
    const auto s = p4_classification(0.35, 0.41);
    const BShape sh = BShape::RatTwo;
    const double t = 0.4;
    const auto cc = f_expansion(sh, t);
    auto Vn = [&](int n, cplx at) { return eval_dnVdx(s, n, at, t); };
    auto rhs1 = [&](cplx at) {
        const auto f2 = f_derivs(sh, 2.0 * at, t);
        return Vn(3, at) / 12.0 + 0.5 * f2.f * Vn(2, at) + (2.0 * cc.c1 + f2.fx) * Vn(1, at);
    };
    auto bracket1 = [&](cplx at) {
        const auto f2 = f_derivs(sh, 2.0 * at, t);
        return Vn(2, at) / 12.0 + 2.0 * cc.c1 * Vn(0, at) + 0.5 * f2.f * Vn(1, at);
    };
    auto rhs3 = [&](cplx at) {
        const auto f2 = f_derivs(sh, 2.0 * at, t);
        return 3.0 / 40.0 * Vn(5, at) + 0.5 * f2.f * Vn(4, at) +
               2.5 * (cc.c1 + f2.fx) * Vn(3, at) + 4.5 * f2.fxx * Vn(2, at) +
               (24.0 * cc.c3 + 3.0 * f2.fxxx) * Vn(1, at);
    };
    auto bracket3 = [&](cplx at) {
        const auto f2 = f_derivs(sh, 2.0 * at, t);
        return 3.0 / 40.0 * Vn(4, at) + 2.5 * cc.c1 * Vn(2, at) + 24.0 * cc.c3 * Vn(0, at) +
               1.5 * f2.fxx * Vn(1, at) + 1.5 * f2.fx * Vn(2, at) + 0.5 * f2.f * Vn(3, at);
    };
    for (const cplx x : {cplx(0.8, 0.15), cplx(1.1, -0.2)}) {
        CHECK(std::abs(rhs1(x) - richardson_diff(bracket1, x, 1e-3, 2)) < 1e-8);
        CHECK(std::abs(rhs3(x) - richardson_diff(bracket3, x, 1e-3, 2)) < 1e-7);
    }
}

TEST_CASE("the drifting-separation branch admits only constant potentials") {
    PotentialFn constant{[](cplx, double) { return cplx(4.2); },
                         [](cplx, double) { return cplx(0.0); },
                         [](cplx, double) { return cplx(0.0); }};
    const double c = 3.0;
    double const_res = 0.0, live_res = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double t = 0.1 + 0.04 * i;
        const cplx x(1.4 + 0.05 * i, 0.3), u1(-0.6 - 0.02 * i, -0.2);
        const_res = std::max(const_res, std::abs(residual_two_zero_drifting(constant, x, u1, t, c)));
        for (const auto& s : {harmonic(1.0, 0.0), p1_classification()})
            live_res = std::max(live_res,
                                std::abs(residual_two_zero_drifting(make_potential_fn(s), x, u1, t, c)));
    }
    CHECK(const_res < 1e-13);
    CHECK(live_res > 1e-2);
    CHECK_THROWS_AS(residual_two_zero_drifting(constant, cplx(1.0), cplx(0.0), 1.0, 3.0),
                    singularity_error);
}

TEST_CASE("log-derivative accessors carry the gauge additions") {
    const double t = 0.4, g0 = 0.35;
    const cplx z(0.6, 0.2);
    BKind plain{BShape::RatOne, gauge_none()};
    BKind lin{BShape::RatOne, gauge_linear_const(g0)};
    BKind quad{BShape::RatOne, gauge_quadratic_const(g0)};
    CHECK(std::abs(f_of(plain, z, t) - 1.0 / z) < 1e-15);
    CHECK(std::abs(f_of(lin, z, t) - (1.0 / z + g0)) < 1e-15);
    CHECK(std::abs(f_of(quad, z, t) - (1.0 / z + 2.0 * g0 * z)) < 1e-15);
    CHECK(std::abs(f_x_of(plain, z, t) + 1.0 / (z * z)) < 1e-15);
    CHECK(std::abs(f_x_of(lin, z, t) + 1.0 / (z * z)) < 1e-15);
    CHECK(std::abs(f_x_of(quad, z, t) - (-1.0 / (z * z) + 2.0 * g0)) < 1e-15);
    CHECK_THROWS_AS(f_of(plain, cplx(0.0), t), singularity_error);
}
