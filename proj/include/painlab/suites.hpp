#ifndef PAINLAB_SUITES_HPP
#define PAINLAB_SUITES_HPP

#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "painlab/classify.hpp"
#include "painlab/config.hpp"
#include "painlab/dynamics.hpp"
#include "painlab/elliptic.hpp"
#include "painlab/funceq.hpp"
#include "painlab/laxpairs.hpp"
#include "painlab/potentials.hpp"
#include "painlab/report.hpp"

namespace painlab {

// ---------------------------------------------------------------------------
// The special-function identity battery.
// Algebraic identities carry tol_elliptic; modular-parameter derivatives are
// checked by finite differences only (plain central step for the 1e-6
// bucket, Richardson-extrapolated for the three time-derivative identities
// that face the tighter tolerance).
// ---------------------------------------------------------------------------

// Near-degenerate lattices (Im tau below this bound) are handled by a
// reduced battery: the lattice becomes almost dense, every pole quotient is
// conditioned beyond double precision, and only the entire-function layer
// remains certifiable without modular transformations (a non-goal here).
inline constexpr double degenerate_im_tau = 0.35;

inline ResidualReport suite_elliptic_degenerate(const RunConfig& cfg) {
    ResidualReport rep;
    rep.suite = "elliptic-identities (degenerate-lattice subset)";
    rep.seed = cfg.seed;
    rep.grid = std::to_string(cfg.samples) + " lattice-coordinate samples";
    const cplx tau(cfg.tau_re, cfg.tau_im);
    EllipticContext ctx(tau, 1e-16, 0.0);
    SampleGen gen(cfg.seed);
    const int N = cfg.samples;
    // conditioning of tau-differences near the real axis, shown in tol
    const double kap = std::max(1.0, std::pow(degenerate_im_tau / tau.imag(), 2));
    double zero_r = 0, parity_r = 0, reduce_r = 0, quasi_r = 0, heat_r = 0;
    for (int a = 0; a <= 3; ++a) {
        const cplx om = ctx.omegas[static_cast<size_t>((a + 3) % 4)];
        zero_r = std::max(zero_r, std::abs(theta(a, om, ctx)));
    }
    for (int i = 0; i < N; ++i) {
        const cplx z = gen.lattice_point(tau);
        parity_r = std::max(parity_r, std::abs(theta(1, -z, ctx) + theta(1, z, ctx)) /
                                          std::max(1.0, std::abs(theta(1, z, ctx))));
        const cplx far = z + 2.0 + 1.0 * ctx.tau;
        const cplx a1 = theta(3, far, ctx);
        const cplx a2 = theta_series_raw(3, far, tau, ctx.trunc + 25);
        reduce_r = std::max(reduce_r, std::abs(a1 - a2) / std::max(1.0, std::abs(a2)));
        const cplx q1 = theta(3, z + 1.0, ctx) - theta(3, z, ctx);
        const cplx q2 = theta(3, z + ctx.tau, ctx) -
                        std::exp(-iu * pi * ctx.tau - 2.0 * pi * iu * z) * theta(3, z, ctx);
        quasi_r = std::max(quasi_r, (std::abs(q1) + std::abs(q2)) /
                                        std::max(1.0, std::abs(theta(3, z, ctx))));
        for (int a = 0; a <= 3; ++a) {
            const cplx dtau = central_diff(
                [&](cplx tt) { return theta_series_raw(a, z, tt, ctx.trunc); }, tau, cfg.fd_step);
            const cplx zz = theta_derivs(a, z, 2, ctx);
            heat_r = std::max(heat_r, std::abs(4.0 * pi * iu * dtau - zz) /
                                          std::max(1.0, std::abs(zz)));
        }
    }
    rep.add("theta-zero-lattice", zero_r, cfg.tol_elliptic * kap, 4);
    rep.add("theta-parity", parity_r, cfg.tol_elliptic * kap, N);
    rep.add("theta-reduction-vs-raw", reduce_r, cfg.tol_elliptic * kap, N);
    rep.add("theta-quasi-periodicity", quasi_r, cfg.tol_elliptic * kap, N);
    rep.add("theta-heat", heat_r, cfg.tol_elliptic_fd * kap, 4 * N);
    rep.add_flag("series truncation enlarged", ctx.trunc > 64);
    return rep;
}

inline ResidualReport suite_elliptic(const RunConfig& cfg) {
    const cplx tau(cfg.tau_re, cfg.tau_im);
    if (tau.imag() < degenerate_im_tau) return suite_elliptic_degenerate(cfg);
    ResidualReport rep;
    rep.suite = "elliptic-identities";
    rep.seed = cfg.seed;
    rep.grid = std::to_string(cfg.samples) + " lattice-coordinate samples";
    const double geom = std::min(1.0, tau.imag() / 1.1);
    EllipticContext ctx(tau, 1e-16, cfg.lattice_radius * geom);
    SampleGen gen(cfg.seed);
    const int N = cfg.samples;
    // Residuals are normalized by the local scale of the identity, clamped
    // at one, so the value equals the absolute residual wherever the terms
    // are of order one or smaller.
    const double atol = cfg.tol_elliptic, ftol = cfg.tol_elliptic_fd;

    struct Worst {
        double r = 0.0;
        cplx at{};
        void feed(double v, cplx z, double scale = 1.0) {
            v /= std::max(1.0, scale);
            if (v > r) {
                r = v;
                at = z;
            }
        }
    };
    auto finish = [&](const std::string& name, const Worst& w, double tol, int n) {
        rep.add(name, w.r, tol, n, point_str(w.at));
    };
    // Margins keep pole distances generic; the vertical extent is capped so
    // multi-period wrap-around cannot push theta quotients to scales where
    // an absolute tolerance loses meaning.
    auto draw_m = [&](double margin, double b_hi) {
        margin *= geom;
        while (true) {
            const double a = gen.uniform(0.06, 0.94);
            const double b = gen.uniform(0.06, b_hi);
            const cplx z = a + b * tau;
            if (lattice_distance(z, ctx) > margin) return z;
        }
    };
    auto draw = [&]() { return draw_m(0.08, 0.92); };
    auto draw_pair_m = [&](cplx& z, cplx& u, double margin, double b_hi) {
        margin *= geom;
        while (true) {
            z = draw_m(margin / std::max(geom, 1e-12), b_hi);
            u = draw_m(margin / std::max(geom, 1e-12), b_hi);
            if (lattice_distance(z + u, ctx) > margin && lattice_distance(z - u, ctx) > margin)
                return;
        }
    };

    // exact zero structure
    {
        Worst w;
        w.feed(std::abs(theta(1, 0.0, ctx)), 0.0);
        for (int a = 0; a <= 3; ++a) {
            const cplx om = ctx.omegas[static_cast<size_t>((a + 3) % 4)];
            w.feed(std::abs(theta(a, om, ctx)), om);
            w.feed(std::abs(theta(a, om + 1.0 + ctx.tau, ctx)), om + 1.0 + ctx.tau);
        }
        finish("theta-zero-lattice", w, atol, 9);
    }
    // wp parity, half-period values, e-sum
    {
        Worst we, wh;
        for (int i = 0; i < N; ++i) {
            const cplx z = draw();
            we.feed(std::abs(wp(-z, ctx) - wp(z, ctx)), z, std::abs(wp(z, ctx)));
        }
        for (int k = 1; k <= 3; ++k)
            wh.feed(std::abs(wp(ctx.omegas[static_cast<size_t>(k)], ctx) - ctx.e[static_cast<size_t>(k - 1)]),
                    ctx.omegas[static_cast<size_t>(k)]);
        finish("wp-even", we, atol, N);
        finish("wp-at-half-periods", wh, atol, 3);
        rep.add("e-sum-zero", std::abs(ctx.e[0] + ctx.e[1] + ctx.e[2]), atol, 1);
    }
    // the wp cubic and the squared theta ratios
    {
        Worst wc, wr;
        for (int i = 0; i < N; ++i) {
            const cplx z = draw();
            const cplx P = wp(z, ctx), Pp = wp_prime(z, ctx);
            wc.feed(std::abs(Pp * Pp - 4.0 * (P - ctx.e[0]) * (P - ctx.e[1]) * (P - ctx.e[2])), z,
                    std::abs(Pp * Pp));
            for (int k = 1; k <= 3; ++k) {
                const int idx = (k == 3) ? 0 : k + 1;
                const cplx ratio = ctx.th1p0 * theta(idx, z, ctx) /
                                   (ctx.null0[static_cast<size_t>(idx)] * theta(1, z, ctx));
                wr.feed(std::abs(ratio * ratio - (P - ctx.e[static_cast<size_t>(k - 1)])), z,
                        std::abs(ratio * ratio));
            }
        }
        finish("wp-cubic", wc, atol, N);
        finish("wp-halfperiod-theta-ratio", wr, atol, 3 * N);
    }
    // Eisenstein layer: definition (numeric -dE1/dz vs wp + 2 eta), lattice
    // behaviour, half-period values and addition
    {
        Worst wd, wp1, wpt, wp2;
        for (int i = 0; i < N; ++i) {
            const cplx z = draw();
            const cplx d =
                richardson_diff([&](cplx zz) { return e1(zz, ctx); }, z, 1e-3, 2);
            wd.feed(std::abs(-d - (wp(z, ctx) + 2.0 * ctx.eta)), z, std::abs(d));
            wp1.feed(std::abs(e1(z + 1.0, ctx) - e1(z, ctx)), z, std::abs(e1(z, ctx)));
            wpt.feed(std::abs(e1(z + ctx.tau, ctx) - e1(z, ctx) + 2.0 * pi * iu), z,
                     std::abs(e1(z, ctx)));
            wp2.feed(std::abs(e2(z + 1.0, ctx) - e2(z, ctx)) +
                         std::abs(e2(z + ctx.tau, ctx) - e2(z, ctx)),
                     z, std::abs(e2(z, ctx)));
        }
        finish("e2-definition", wd, atol, N);
        finish("e1-periodicity", wp1, atol, N);
        finish("e1-tau-shift", wpt, atol, N);
        finish("e2-periodicity", wp2, atol, N);
        Worst wa, ws;
        static const double dom[4] = {0.0, 0.0, 0.5, 0.5};
        for (int j = 1; j <= 3; ++j) {
            wa.feed(std::abs(e1(ctx.omegas[static_cast<size_t>(j)], ctx) + 2.0 * pi * iu * dom[j]),
                    ctx.omegas[static_cast<size_t>(j)]);
            for (int k = 1; k <= 3; ++k) {
                if (j == k) continue;
                const cplx s = ctx.omegas[static_cast<size_t>(j)] + ctx.omegas[static_cast<size_t>(k)];
                ws.feed(std::abs(e1(ctx.omegas[static_cast<size_t>(j)], ctx) +
                                 e1(ctx.omegas[static_cast<size_t>(k)], ctx) - e1(s, ctx)),
                        s);
            }
        }
        finish("e1-at-half-periods", wa, atol, 3);
        finish("e1-half-period-addition", ws, atol, 6);
    }
    // Phi layer
    {
        Worst wsym, wprod, wadd, wdz, wlat;
        for (int i = 0; i < N; ++i) {
            cplx z, u;
            draw_pair_m(z, u, 0.16, 0.5);
            wsym.feed(std::abs(phi(u, z, ctx) - phi(z, u, ctx)), z, std::abs(phi(u, z, ctx)));
            wprod.feed(std::abs(phi(u, z, ctx) * phi(-u, z, ctx) - (wp(z, ctx) - wp(u, ctx))), z,
                       std::abs(wp(z, ctx) - wp(u, ctx)));
            cplx w;
            do {
                w = draw_m(0.16, 0.5);
            } while (lattice_distance(z + u + w, ctx) < 0.16 * geom ||
                     lattice_distance(u + w, ctx) < 0.16 * geom);
            wadd.feed(std::abs(phi(u, z, ctx) * phi(w, z, ctx) -
                               phi(u + w, z, ctx) *
                                   (e1(z, ctx) + e1(u, ctx) + e1(w, ctx) - e1(z + u + w, ctx))),
                      z, std::abs(phi(u, z, ctx) * phi(w, z, ctx)));
            const cplx d = richardson_diff([&](cplx zz) { return phi(u, zz, ctx); }, z, 3e-4, 2);
            wdz.feed(std::abs(d - phi(u, z, ctx) * (e1(u + z, ctx) - e1(z, ctx))), z, std::abs(d));
            wlat.feed(std::abs(phi(u, z + 1.0, ctx) - phi(u, z, ctx)) +
                          std::abs(phi(u, z + ctx.tau, ctx) -
                                   std::exp(-2.0 * pi * iu * u) * phi(u, z, ctx)),
                      z, std::abs(std::exp(-2.0 * pi * iu * u) * phi(u, z, ctx)));
        }
        finish("phi-symmetry", wsym, atol, N);
        finish("phi-product", wprod, atol, N);
        finish("phi-addition", wadd, atol, N);
        finish("phi-z-derivative", wdz, atol, N);
        finish("phi-lattice", wlat, atol, N);
    }
    // varphi layer
    {
        Worst wsq, wdf, wpr, wdv;
        for (int i = 0; i < N; ++i) {
            const cplx z = draw();
            const cplx P = wp(z, ctx);
            std::array<cplx, 4> v{};
            for (int j = 1; j <= 3; ++j) v[static_cast<size_t>(j)] = varphi(j, z, ctx);
            for (int j = 1; j <= 3; ++j) {
                wsq.feed(std::abs(v[static_cast<size_t>(j)] * v[static_cast<size_t>(j)] -
                                  (P - ctx.e[static_cast<size_t>(j - 1)])),
                         z, std::abs(P));
                const int k = j % 3 + 1, l = k % 3 + 1;
                wdf.feed(std::abs(v[static_cast<size_t>(j)] * v[static_cast<size_t>(j)] -
                                  v[static_cast<size_t>(k)] * v[static_cast<size_t>(k)] -
                                  (ctx.e[static_cast<size_t>(k - 1)] - ctx.e[static_cast<size_t>(j - 1)])),
                         z, std::abs(P));
                const cplx oml = ctx.omegas[static_cast<size_t>(l)];
                if (lattice_distance(z + oml, ctx) < 0.08 * geom) continue;
                wpr.feed(std::abs(v[static_cast<size_t>(j)] * v[static_cast<size_t>(k)] -
                                  v[static_cast<size_t>(l)] *
                                      (e1(z, ctx) + e1(oml, ctx) - e1(z + oml, ctx))),
                         z, std::abs(v[static_cast<size_t>(j)] * v[static_cast<size_t>(k)]));
                const cplx d = richardson_diff([&](cplx zz) { return varphi(j, zz, ctx); }, z, 1e-3, 2);
                wdv.feed(std::abs(d + v[static_cast<size_t>(k)] * v[static_cast<size_t>(l)]), z,
                         std::abs(d));
            }
        }
        finish("varphi-square", wsq, atol, 3 * N);
        finish("varphi-difference", wdf, atol, 3 * N);
        finish("varphi-product", wpr, atol, 3 * N);
        finish("varphi-derivative", wdv, atol, 3 * N);
    }
    // half-period differences against theta nulls
    {
        const cplx t0 = ctx.null0[0], t2 = ctx.null0[2], t3 = ctx.null0[3];
        const double sc = std::max(1.0, std::abs(ctx.e[0]) + std::abs(ctx.e[1]) + std::abs(ctx.e[2]));
        double r = std::abs(ctx.e[0] - ctx.e[1] - pi * pi * t0 * t0 * t0 * t0);
        r = std::max(r, std::abs(ctx.e[0] - ctx.e[2] - pi * pi * t3 * t3 * t3 * t3));
        r = std::max(r, std::abs(ctx.e[1] - ctx.e[2] - pi * pi * t2 * t2 * t2 * t2));
        rep.add("halfperiod-theta-null", r / sc, atol, 3);
    }
    // algebraic modulus layer
    {
        Worst w5, w6, w7;
        const cplx T = modulus_T(ctx), de = ctx.e[1] - ctx.e[0];
        rep.add("modulus-theta-null", std::abs(T - std::pow(ctx.null0[3] / ctx.null0[0], 4)), atol, 1);
        for (int i = 0; i < N; ++i) {
            const cplx z = draw();
            const cplx X = map_X(z, ctx), Xx = map_X_dx(z, ctx);
            w6.feed(std::abs(Xx * Xx - 4.0 * de * X * (X - 1.0) * (X - T)), z, std::abs(Xx * Xx));
            const cplx Xxx = detail::wp_deriv_n(z, 2, ctx) / de;
            w5.feed(std::abs(Xxx - 2.0 * de * X * (X - 1.0) * (X - T) *
                                       (1.0 / X + 1.0 / (X - 1.0) + 1.0 / (X - T))),
                    z, std::abs(Xxx));
            const double s7 = std::max(1.0, std::abs(wp(z + ctx.omegas[1], ctx)));
            double r7 = std::abs(de * T / X - (wp(z + ctx.omegas[1], ctx) - ctx.e[0]));
            r7 = std::max(r7, std::abs(-de * (T - 1.0) / (X - 1.0) -
                                       (wp(z + ctx.omegas[2], ctx) - ctx.e[1])));
            r7 = std::max(r7, std::abs(de * T * (T - 1.0) / (X - T) -
                                       (wp(z + ctx.omegas[3], ctx) - ctx.e[2])));
            w7.feed(r7 / s7, z);
        }
        finish("x-map-derivative-square", w6, atol, N);
        finish("x-map-second-derivative", w5, atol, N);
        finish("wp-shift-partial-fractions", w7, atol, N);
    }
    // time derivatives of the modulus data at the tight tolerance:
    // Richardson-extrapolated central differences in t.
    {
        // d/dt = 2 pi i d/dtau; the tau-differences step along the real
        // direction so Im tau never drifts toward the boundary.
        auto deep = [&](const std::function<cplx(cplx)>& f) {
            return 2.0 * pi * iu * richardson_diff(f, tau, 1e-1, 4);
        };
        const cplx T = modulus_T(ctx), de = ctx.e[1] - ctx.e[0];
        const cplx Tt = deep([&](cplx tt) { return modulus_T(EllipticContext(tt)); });
        const cplx Tt_rhs = 2.0 * de * T * (T - 1.0);
        rep.add("modulus-time-derivative", std::abs(Tt - Tt_rhs) / std::max(1.0, std::abs(Tt_rhs)),
                atol, 1);
        const cplx det = deep([&](cplx tt) {
            EllipticContext c(tt);
            return c.e[1] - c.e[0];
        });
        const cplx mod_rhs = -(ctx.e[2] + 2.0 * ctx.eta) / (T * (T - 1.0));
        rep.add("ek-difference-in-modulus",
                std::abs(det / Tt - mod_rhs) / std::max(1.0, std::abs(mod_rhs)), atol, 1);
        Worst w9;
        for (int i = 0; i < 8; ++i) {
            cplx z;
            do {
                z = draw_m(0.2, 0.6);
            } while (lattice_distance(z - ctx.omegas[3], ctx) < 0.1 * geom);
            const cplx Xt = deep([&](cplx tt) { return map_X(z, EllipticContext(tt)); });
            const cplx rhs = map_X_dx(z, ctx) * theta_derivs(0, z, 1, ctx) / theta(0, z, ctx);
            w9.feed(std::abs(Xt - rhs), z, std::abs(rhs));
        }
        finish("x-map-time-derivative", w9, atol, 8);
    }
    // plain finite-difference tau-derivative bucket
    {
        const double h = cfg.fd_step;
        auto dftau = [&](const std::function<cplx(const EllipticContext&)>& f) {
            EllipticContext cp(tau + h, 1e-16, cfg.lattice_radius);
            EllipticContext cm(tau - h, 1e-16, cfg.lattice_radius);
            return (f(cp) - f(cm)) / (2.0 * h);
        };
        Worst wheat;
        for (int i = 0; i < N / 2 + 1; ++i) {
            const cplx z = gen.lattice_point(tau);
            for (int a = 0; a <= 3; ++a) {
                const cplx dtau = dftau([&](const EllipticContext& c) { return theta(a, z, c); });
                wheat.feed(std::abs(4.0 * pi * iu * dtau - theta_derivs(a, z, 2, ctx)), z,
                           std::abs(theta_derivs(a, z, 2, ctx)));
            }
        }
        finish("theta-heat", wheat, ftol, 4 * (N / 2 + 1));
        Worst w12, w13, w14;
        for (int i = 0; i < N / 2 + 1; ++i) {
            cplx z, u;
            draw_pair_m(z, u, 0.2, 0.5);
            const cplx d12 = dftau([&](const EllipticContext& c) { return phi(z, u, c); });
            // d/dz d/du Phi, analytic: Phi [ (E1(z+u)-E1(u)) (E1(z+u)-E1(z)) - E2(z+u) ]
            const cplx mixed =
                phi(z, u, ctx) * ((e1(z + u, ctx) - e1(u, ctx)) * (e1(z + u, ctx) - e1(z, ctx)) -
                                  e2(z + u, ctx));
            w12.feed(std::abs(d12 - kappa * mixed), z, std::abs(kappa * mixed));
            const cplx d13 = dftau([&](const EllipticContext& c) { return e1(z, c); });
            w13.feed(std::abs(d13 - dtau_e1(z, ctx)), z, std::abs(dtau_e1(z, ctx)));
            const cplx d14 = dftau([&](const EllipticContext& c) { return e2(z, c); });
            w14.feed(std::abs(d14 - dtau_e2(z, ctx)), z, std::abs(dtau_e2(z, ctx)));
        }
        finish("phi-tau-derivative", w12, ftol, N / 2 + 1);
        finish("e1-tau-derivative", w13, ftol, N / 2 + 1);
        finish("e2-tau-derivative", w14, ftol, N / 2 + 1);
        // log derivatives are differenced as log of the two-sided ratio so
        // that square-lattice values sitting on the negative real axis do
        // not trip the principal branch
        auto dftau_log = [&](const std::function<cplx(const EllipticContext&)>& f) {
            EllipticContext cp(tau + h, 1e-16, cfg.lattice_radius * geom);
            EllipticContext cm(tau - h, 1e-16, cfg.lattice_radius * geom);
            return std::log(f(cp) / f(cm)) / (2.0 * h);
        };
        {
            double r = 0.0;
            const cplx d1 = dftau_log([&](const EllipticContext& c) { return c.null0[3] / c.null0[2]; });
            r = std::max(r, std::abs(ctx.e[0] - ctx.e[1] - 4.0 * pi * iu * d1) /
                                std::max(1.0, std::abs(ctx.e[0] - ctx.e[1])));
            const cplx d2 = dftau_log([&](const EllipticContext& c) { return c.null0[0] / c.null0[2]; });
            r = std::max(r, std::abs(ctx.e[0] - ctx.e[2] - 4.0 * pi * iu * d2) /
                                std::max(1.0, std::abs(ctx.e[0] - ctx.e[2])));
            const cplx d3 = dftau_log([&](const EllipticContext& c) { return c.null0[0] / c.null0[3]; });
            r = std::max(r, std::abs(ctx.e[1] - ctx.e[2] - 4.0 * pi * iu * d3) /
                                std::max(1.0, std::abs(ctx.e[1] - ctx.e[2])));
            rep.add("halfperiod-null-tau", r, ftol, 3);
        }
        {
            double r = 0.0;
            for (int k = 1; k <= 3; ++k) {
                const int idx = (k == 3) ? 0 : k + 1;
                const cplx d = dftau_log([&](const EllipticContext& c) {
                    return std::pow(c.th1p0, 1.0 / 3.0) / c.null0[static_cast<size_t>(idx)];
                });
                r = std::max(r, std::abs(ctx.e[static_cast<size_t>(k - 1)] - 4.0 * pi * iu * d) /
                                    std::max(1.0, std::abs(ctx.e[static_cast<size_t>(k - 1)])));
            }
            rep.add("ek-null-tau", r, ftol, 3);
        }
        {
            double r = 0.0;
            const int jkl[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
            for (const auto& p : jkl) {
                const cplx d = dftau_log([&](const EllipticContext& c) {
                    return c.e[static_cast<size_t>(p[0] - 1)] - c.e[static_cast<size_t>(p[1] - 1)];
                });
                r = std::max(r, std::abs(pi * iu * d + ctx.e[static_cast<size_t>(p[2] - 1)] + 2.0 * ctx.eta) /
                                    std::max(1.0, std::abs(ctx.e[static_cast<size_t>(p[2] - 1)] + 2.0 * ctx.eta)));
            }
            rep.add("ek-difference-log-tau", r, ftol, 3);
        }
        Worst w27;
        for (int i = 0; i < 8; ++i) {
            const cplx z = draw_m(0.16, 0.6);
            const cplx d = dftau([&](const EllipticContext& c) { return map_X(z, c); });
            const cplx rhs = kappa * map_X_dx(z, ctx) *
                             (e1(z + ctx.omegas[3], ctx) - e1(ctx.omegas[3], ctx));
            w27.feed(std::abs(d - rhs), z, std::abs(rhs));
        }
        finish("x-map-tau-derivative", w27, ftol, 8);
    }
    return rep;
}

// Focused modular-derivative identity check at caller-supplied points;
// derivatives by central differences in tau only.
inline ResidualReport check_tau_identities(const EllipticContext& ctx,
                                           const std::vector<cplx>& sample_points,
                                           double fd_step = 1e-5) {
    ResidualReport rep;
    rep.suite = "tau-derivative-identities";
    rep.grid = std::to_string(sample_points.size()) + " supplied points";
    const cplx tau = ctx.tau;
    auto dftau = [&](const std::function<cplx(const EllipticContext&)>& f) {
        EllipticContext cp(tau + fd_step, ctx.tail_tol, ctx.lattice_radius);
        EllipticContext cm(tau - fd_step, ctx.tail_tol, ctx.lattice_radius);
        return (f(cp) - f(cm)) / (2.0 * fd_step);
    };
    double r_e1 = 0, r_e2 = 0, r_phi = 0, r_phidz = 0, r_philat = 0, r_addition = 0, r_x = 0;
    for (size_t i = 0; i < sample_points.size(); ++i) {
        const cplx z = sample_points[i];
        const cplx u = sample_points[(i + 1) % sample_points.size()] * 0.83 + 0.07;
        const cplx d13 = dftau([&](const EllipticContext& c) { return e1(z, c); });
        r_e1 = std::max(r_e1, std::abs(d13 - dtau_e1(z, ctx)));
        const cplx d14 = dftau([&](const EllipticContext& c) { return e2(z, c); });
        r_e2 = std::max(r_e2, std::abs(d14 - dtau_e2(z, ctx)));
        const cplx d12 = dftau([&](const EllipticContext& c) { return phi(z, u, c); });
        const cplx mixed =
            phi(z, u, ctx) * ((e1(z + u, ctx) - e1(u, ctx)) * (e1(z + u, ctx) - e1(z, ctx)) -
                              e2(z + u, ctx));
        r_phi = std::max(r_phi, std::abs(d12 - kappa * mixed));
        const cplx dz = richardson_diff([&](cplx zz) { return phi(u, zz, ctx); }, z, 3e-4, 2);
        r_phidz = std::max(r_phidz, std::abs(dz - phi_dz(u, z, ctx)));
        r_philat = std::max(r_philat,
                            std::abs(phi(u, z + ctx.tau, ctx) -
                                     std::exp(-2.0 * pi * iu * u) * phi(u, z, ctx)));
        const cplx w = 0.11 + 0.61 * u;
        r_addition = std::max(
            r_addition, std::abs(phi(u, z, ctx) * phi(w, z, ctx) -
                                 phi(u + w, z, ctx) * (e1(z, ctx) + e1(u, ctx) + e1(w, ctx) -
                                                       e1(z + u + w, ctx))));
        const cplx dX = dftau([&](const EllipticContext& c) { return map_X(z, c); });
        const cplx rhsX = kappa * map_X_dx(z, ctx) *
                          (e1(z + ctx.omegas[3], ctx) - e1(ctx.omegas[3], ctx));
        r_x = std::max(r_x, std::abs(dX - rhsX));
    }
    const int n = static_cast<int>(sample_points.size());
    rep.add("e1-tau-derivative", r_e1, 1e-6, n);
    rep.add("e2-tau-derivative", r_e2, 1e-6, n);
    rep.add("phi-tau-derivative", r_phi, 1e-6, n);
    rep.add("phi-z-derivative", r_phidz, 1e-8, n);
    rep.add("phi-lattice", r_philat, 1e-9, n);
    rep.add("phi-addition", r_addition, 1e-9, n);
    rep.add("x-map-tau-derivative", r_x, 1e-6, n);
    // algebraic companions at the same lattice
    {
        double r = std::abs(ctx.e[0] + ctx.e[1] + ctx.e[2]);
        static const double dom[4] = {0.0, 0.0, 0.5, 0.5};
        for (int j = 1; j <= 3; ++j)
            r = std::max(r, std::abs(e1(ctx.omegas[static_cast<size_t>(j)], ctx) +
                                     2.0 * pi * iu * dom[j]));
        rep.add("half-period-values", r, 1e-9, 4);
        const cplx T = modulus_T(ctx), de = ctx.e[1] - ctx.e[0];
        const cplx Tt = 2.0 * pi * iu * richardson_diff(
                                            [&](cplx tt) { return modulus_T(EllipticContext(tt)); },
                                            tau, 1e-1, 4);
        rep.add("modulus-time-derivative",
                std::abs(Tt - 2.0 * de * T * (T - 1.0)) / std::max(1.0, std::abs(Tt)), 1e-9, 1);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Functional equation suites
// ---------------------------------------------------------------------------

struct FunceqPairing {
    std::string name;
    PotentialSpec spec;
    BKind bk;
};

inline std::vector<FunceqPairing> funceq_soundness_pairings() {
    return {
        {"p1/rat-one", p1_classification(), {BShape::RatOne, gauge_none()}},
        {"p2/rat-one", p2_classification(0.7), {BShape::RatOne, gauge_none()}},
        {"harmonic/rat-one", harmonic(1.3, -0.7), {BShape::RatOne, gauge_none()}},
        {"p4/rat-two", p4_classification(0.35, 0.41), {BShape::RatTwo, gauge_none()}},
        {"p4-quartic/rat-two", p4_quartic(-0.5), {BShape::RatTwo, gauge_none()}},
        {"calogero2/rat-two", calogero2(0.9, 0.27), {BShape::RatTwo, gauge_none()}},
        {"p3/hyp-one", p3_classification(0.2, -0.35, 0.81, 0.44), {BShape::HypOne, gauge_none()}},
        {"p5/hyp-two", p5_classification(0.3, 0.45, 0.25), {BShape::HypTwo, gauge_none()}},
        {"p6/theta-two", p6(0.31, -0.22, 0.47, 0.16), {BShape::ThetaTwo, gauge_none()}},
    };
}

// Max residual of a (potential, shape) pairing over a deterministic grid
// with singular-set exclusions.
inline double funceq_grid_residual(const PotentialSpec& spec, const BKind& bk, int grid,
                                   std::uint64_t seed, double exclusion, std::string* worst_at = nullptr) {
    SampleGen gen(seed);
    double worst = 0.0;
    cplx worst_x{};
    const bool theta_shape = bk.elliptic_shape();
    for (int i = 0; i < grid; ++i) {
        double t;
        cplx x, u;
        if (theta_shape) {
            t = gen.uniform(0.13, 0.30);
            EllipticContext ctx(tau_from_t(cplx(t)));
            // the elliptic potential is singular on the half-period shifted
            // lattices as well, so both points keep their distance from the
            // full half-lattice
            auto off_singular = [&](cplx z) {
                for (int k = 0; k < 4; ++k)
                    if (lattice_distance(z + ctx.omegas[static_cast<size_t>(k)], ctx) < exclusion)
                        return false;
                return true;
            };
            do {
                x = gen.lattice_point(ctx.tau);
                u = gen.lattice_point(ctx.tau);
            } while (lattice_distance(x - u, ctx) < exclusion ||
                     lattice_distance(x + u, ctx) < exclusion || !off_singular(x) ||
                     !off_singular(u) || lattice_distance(2.0 * x, ctx) < exclusion);
            const double r = bk.two_zero() ? std::abs(residual_two_zero(spec, bk, x, u, t, &ctx))
                                           : std::abs(residual_one_zero(spec, bk, x, u, t, &ctx));
            if (r > worst) {
                worst = r;
                worst_x = x;
            }
            continue;
        }
        t = gen.uniform(0.1, 1.1);
        do {
            x = gen.box(0.45, 1.35, -0.45, 0.45);
            u = gen.box(-1.35, -0.45, -0.45, 0.45);
        } while (std::abs(x - u) < exclusion || std::abs(x + u) < exclusion ||
                 std::abs(x) < exclusion || std::abs(u) < exclusion);
        const double r = bk.two_zero() ? std::abs(residual_two_zero(spec, bk, x, u, t))
                                       : std::abs(residual_one_zero(spec, bk, x, u, t));
        if (r > worst) {
            worst = r;
            worst_x = x;
        }
    }
    if (worst_at) *worst_at = point_str(worst_x);
    return worst;
}

inline ResidualReport suite_funceq(const RunConfig& cfg) {
    ResidualReport rep;
    rep.suite = "functional-equations";
    rep.seed = cfg.seed;
    rep.grid = std::to_string(cfg.grid) + " samples per pairing, exclusion " +
               std::to_string(cfg.exclusion);
    for (const auto& pr : funceq_soundness_pairings()) {
        std::string at;
        const double r = funceq_grid_residual(pr.spec, pr.bk, cfg.grid, cfg.seed, cfg.exclusion, &at);
        rep.add(pr.name, r, cfg.tol_funceq, cfg.grid, at);
    }
    // selectivity: mismatched pairings must fail visibly
    {
        const double r = funceq_grid_residual(p1_classification(), {BShape::RatTwo, gauge_none()},
                                              cfg.grid, cfg.seed, cfg.exclusion);
        rep.add_exceeds("selectivity p1/rat-two", r, cfg.tol_selectivity, cfg.grid);
    }
    {
        auto tv = elliptic_one_zero_triviality(0.2, 24);
        rep.add_exceeds("selectivity wp/theta-one", tv.wp_max_residual, cfg.tol_selectivity, 24);
        rep.add("theta-one constant potential", tv.constant_residual, cfg.tol_funceq, 24);
    }
    // heat equation for the three shapes
    {
        double r = std::abs(heat_residual(BShape::RatOne, cplx(0.4, 0.2), 0.3, cfg.fd_step));
        rep.add("heat rational", r, 1e-12, 1);
        r = std::abs(heat_residual(BShape::HypOne, cplx(0.4, 0.2), 0.3, cfg.fd_step));
        rep.add("heat hyperbolic", r, 1e-9, 1);
        r = std::abs(heat_residual(BShape::ThetaOne, cplx(0.3, 0.2), 0.2, cfg.fd_step));
        rep.add("heat theta", r, 1e-7, 1);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classification suite
// ---------------------------------------------------------------------------

inline ResidualReport suite_classify(const RunConfig& cfg) {
    ResidualReport rep;
    rep.suite = "classification";
    rep.seed = cfg.seed;
    rep.grid = "exact arithmetic + elliptic sampling";
    // exact enumeration, tolerance-free
    const auto r1 = solve_constraints(ClassifyCase::RatOne);
    rep.add_flag("rat-one: three families", r1.families.size() == 3);
    rep.add_flag("rat-one: harmonic frozen coefficients",
                 r1.families[0].odes == std::vector<std::string>{"adot2 = 0", "adot1 = 0"});
    rep.add_flag("rat-one: cubic slope one-half",
                 r1.families[1].odes == std::vector<std::string>{"adot1 = 1/2"});
    rep.add_flag("rat-one: quartic drift",
                 r1.families[2].odes == std::vector<std::string>{"adot2 = 1", "adot1 = 0"});
    const auto r2 = solve_constraints(ClassifyCase::RatTwo);
    rep.add_flag("rat-two: three cases", r2.families.size() == 3);
    rep.add_flag("rat-two: sextic drift",
                 r2.families[0].odes ==
                     std::vector<std::string>{"mudot = 0", "nudot = 0", "adot4 = 4*mu",
                                              "adot2 = 2*a4"});
    rep.add_flag("rat-two: solved time dependence",
                 r2.families[0].coefficients.size() >= 2 &&
                     r2.families[0].coefficients[0] == "a4 = 4*mu*t + alpha4" &&
                     r2.families[0].coefficients[1] == "a2 = 4*mu*t^2 + 2*alpha4*t + alpha2");
    const auto h1 = solve_constraints(ClassifyCase::HypOne);
    rep.add_flag("hyp-one: single four-exponent family", h1.families.size() == 1);
    rep.add_flag("hyp-one: exponential rates {2,1,1,2}",
                 h1.families[0].odes ==
                     std::vector<std::string>{"adot4 = 2*a4", "adot3 = 1*a3", "adot1 = 1*a1",
                                              "adot0 = 2*a0"});
    const auto h2 = solve_constraints(ClassifyCase::HypTwo);
    rep.add_flag("hyp-two: exponents {0,2,4}",
                 h2.hyp_two_exponents == std::vector<int>{0, 2, 4});
    // degree-bound tightness
    {
        auto id6 = build_cleared_identity(ClassifyCase::RatOne, 6);
        auto sys6 = full_constraints(id6, "rat-one deg 6");
        bool a5zero = false, a6zero = false;
        for (const auto& row : sys6.rows) {
            if (row.str() == "a5") a5zero = true;
            if (row.str() == "a6") a6zero = true;
        }
        rep.add_flag("rat-one: degree bound tight (a5=a6=0)", a5zero && a6zero);
    }
    // round-trip: emitted families, instantiated as catalog potentials,
    // satisfy the master equations
    for (const auto& pr : funceq_soundness_pairings()) {
        const double r = funceq_grid_residual(pr.spec, pr.bk, cfg.grid / 2, cfg.seed + 1, cfg.exclusion);
        rep.add("round-trip " + pr.name, r, cfg.tol_funceq, cfg.grid / 2);
    }
    // elliptic coefficient ODEs at five modular parameters
    {
        const auto odes = verify_elliptic_coefficient_odes({0.15, 0.18, 0.21, 0.25, 0.30}, cfg.fd_step);
        rep.add("elliptic coefficient odes", odes.max_ode_residual, cfg.tol_ode, 20);
        rep.add("modulus-derivative identity", odes.max_modulus_residual, cfg.tol_ode, 5);
    }
    // one-zero elliptic triviality
    {
        const auto tv = elliptic_one_zero_triviality(0.2, 24);
        rep.add("theta-one: constant passes", tv.constant_residual, cfg.tol_funceq, 24);
        rep.add_exceeds("theta-one: wp fails", tv.wp_min_residual, cfg.tol_selectivity, 24);
        rep.add("theta-one: wp curvature periodic", tv.periodicity_residual, 1e-8, 24);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Connection (Lax pair) suites
// ---------------------------------------------------------------------------

struct LaxRunSetup {
    LaxPair pair;
    cplx u0, v0;
    double t0, t1;
    double x_lo, x_hi;
};

inline LaxRunSetup lax_setup(LaxFamily f, const RunConfig& cfg) {
    switch (f) {
        case LaxFamily::P1: return {lax_p1(), {cfg.u0, 0}, {cfg.v0, 0}, cfg.t0, cfg.t1, 0.5, 1.5};
        case LaxFamily::P2: return {lax_p2(0.4), {cfg.u0, 0}, {cfg.v0, 0}, cfg.t0, cfg.t1, 0.5, 1.5};
        case LaxFamily::P3Trunc: return {lax_p3_trunc(0.5), {0.5, 0}, {-0.2, 0}, 0.0, 0.8, 0.5, 1.5};
        case LaxFamily::P3Full:
            return {lax_p3_full(0.37, 0.52, 0.18), {0.3, 0}, {0.1, 0}, 0.30, 0.45, 0.5, 1.3};
        case LaxFamily::P4: return {lax_p4(0.3, 0.7), {cfg.u0, 0}, {cfg.v0, 0}, 0.0, 0.8, 0.5, 1.5};
        case LaxFamily::P5: return {lax_p5(0.12, 0.38, 0.30), {0.75, 0}, {0.0, 0}, 0.0, 0.4, 0.6, 1.4};
    }
    throw unknown_family_error("lax_setup: unhandled family");
}

inline ResidualReport suite_laxpair(const RunConfig& cfg, LaxFamily family, bool apply_shift = true) {
    ResidualReport rep;
    rep.suite = std::string("lax-pair ") + lax_family_name(family);
    rep.seed = cfg.seed;
    const auto setup = lax_setup(family, cfg);
    rep.grid = "50 (x,t) samples along the trajectory";
    IntegratorConfig icfg;
    icfg.h = cfg.rk_h;
    const Trajectory tr =
        integrate(classical_spec_for(setup.pair), setup.u0, setup.v0, setup.t0, setup.t1, icfg);

    double zc = 0, tracew = 0, bzero = 0, cons = 0, cons_noshift = 1e300;
    double rows_max = 0, relation = 0, x_indep = 0;
    std::string zc_at;
    for (int i = 0; i < 50; ++i) {
        const double ts = setup.t0 + (setup.t1 - setup.t0) * (i + 0.5) / 50.0;
        const cplx x = setup.x_lo + (setup.x_hi - setup.x_lo) * ((i * 7) % 50) / 50.0;
        const LaxPoint pt{x, ts, tr.u_at(ts), tr.v_at(ts)};
        cplx udd;
        if (family == LaxFamily::P3Full) {
            // self-consistency mode: the acceleration comes from the (2,1)
            // component itself and is checked for x-independence
            udd = implied_uddot(setup.pair, pt);
            const cplx udd2 = implied_uddot(setup.pair, {pt.x + 0.17, pt.t, pt.u, pt.ud});
            x_indep = std::max(x_indep, std::abs(udd - udd2));
            const auto sc = component_identities(setup.pair, pt, udd);
            rows_max = std::max({rows_max, std::abs(sc.row11), std::abs(sc.row12)});
        } else {
            udd = lax_force(setup.pair, pt.u, pt.t);
        }
        const double r = zero_curvature_residual(setup.pair, pt, udd);
        if (r > zc) {
            zc = r;
            zc_at = point_str(pt.x) + " t=" + std::to_string(pt.t);
        }
        const Matrix2 U = build_U(setup.pair, pt.x, pt.t, pt.u, pt.ud);
        const Matrix2 V = build_V(setup.pair, pt.x, pt.t, pt.u, pt.ud);
        tracew = std::max({tracew, std::abs(U.trace()), std::abs(V.trace())});
        bzero = std::max(bzero, std::abs(build_U(setup.pair, pt.u, pt.t, pt.u, pt.ud).b));
        cons = std::max(cons, std::abs(potential_consistency(setup.pair, pt, apply_shift)));
        if (family == LaxFamily::P4 || family == LaxFamily::P5)
            cons_noshift = std::min(cons_noshift, std::abs(potential_consistency(setup.pair, pt, false)));
        if (family == LaxFamily::P2 || family == LaxFamily::P3Full)
            relation = std::max(relation, std::abs(lower_entry_relation(setup.pair, pt)));
        const auto sc = component_identities(setup.pair, pt, udd);
        rows_max = std::max({rows_max, std::abs(sc.bx_minus_2B)});
    }
    rep.add("zero-curvature", zc, cfg.tol_lax, 50, zc_at);
    rep.add("traceless", tracew, cfg.tol_lax_exact, 50);
    rep.add("upper-entry zero at x=u", bzero, cfg.tol_lax_exact, 50);
    rep.add("gauge condition b_x = 2 V12", rows_max, cfg.tol_la_relation, 50);
    if (family == LaxFamily::P2 || family == LaxFamily::P3Full)
        rep.add("lower-entry relation", relation, cfg.tol_la_relation, 50);
    if (family == LaxFamily::P3Full)
        rep.add("implied force x-independence", x_indep, cfg.tol_lax, 50);
    if (apply_shift) {
        rep.add("potential consistency (shifted)", cons, cfg.tol_consistency, 50);
        if (family == LaxFamily::P4 || family == LaxFamily::P5)
            rep.add_exceeds("potential consistency unshifted", cons_noshift, cfg.tol_consistency_fail,
                            50);
    } else {
        // with the shifts disabled the identity must fail for the shifted
        // families; the report shows the plain residual against the pass
        // tolerance, so the suite (and the CLI) exits nonzero
        rep.add("potential consistency (shift disabled)", cons, cfg.tol_consistency, 50);
    }
    // holonomy refinement study for the rational pairs
    if (family == LaxFamily::P1 || family == LaxFamily::P2) {
        const Rectangle rect{setup.x_lo + 0.3, setup.x_hi - 0.2, setup.t0 + 0.1,
                             setup.t0 + 0.35 * (setup.t1 - setup.t0)};
        const auto rep_h = holonomy(setup.pair, tr, rect, 32, 2);
        const double worst_order = std::min(rep_h.orders[0], rep_h.orders[1]);
        rep.add_exceeds("holonomy convergence order", worst_order, 2.0 - 0.15, 3);
        rep.add("holonomy finest deficit", rep_h.deficits.back(), 1e-5, 3);
    }
    // reconstruction of the lower rows for the polynomial pairs
    if (family == LaxFamily::P1 || family == LaxFamily::P2) {
        const LaxPoint pt{cplx(0.9, 0.0), 0.37, cplx(0.63, 0), cplx(0.21, 0)};
        const auto rec = reconstruct_lower_rows(setup.pair, pt);
        const Matrix2 U = build_U(setup.pair, pt.x, pt.t, pt.u, pt.ud);
        const Matrix2 V = build_V(setup.pair, pt.x, pt.t, pt.u, pt.ud);
        const double r = std::max({std::abs(rec.U21 - U.c), std::abs(rec.V11 - V.a),
                                   std::abs(rec.V12 - V.b), std::abs(rec.V21 - V.c)});
        rep.add("lower-row reconstruction", r, cfg.tol_la_relation, 4);
    }
    if (family == LaxFamily::P1 || family == LaxFamily::P4) {
        const double r =
            std::abs(pole_evaluation_residual(setup.pair, 0.37, cplx(0.63, 0), cplx(0.21, 0)));
        rep.add("pole evaluation identity", r, cfg.tol_la_relation, 1);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Dynamics suite
// ---------------------------------------------------------------------------

inline ResidualReport suite_dynamics(const RunConfig& cfg) {
    ResidualReport rep;
    rep.suite = "dynamics";
    rep.seed = cfg.seed;
    rep.grid = "RK4 h=" + std::to_string(cfg.rk_h);
    IntegratorConfig icfg;
    icfg.h = cfg.rk_h;
    // Hamiltonian drift along every acceptance trajectory
    for (LaxFamily f : {LaxFamily::P1, LaxFamily::P2, LaxFamily::P3Trunc, LaxFamily::P4, LaxFamily::P5}) {
        const auto setup = lax_setup(f, cfg);
        const auto spec = classical_spec_for(setup.pair);
        const auto tr = integrate(spec, setup.u0, setup.v0, setup.t0, setup.t1, icfg);
        rep.add(std::string("drift ") + lax_family_name(f), hamiltonian_drift(tr, spec),
                cfg.tol_drift, static_cast<int>(tr.size()));
    }
    // forward-backward round trip
    {
        const auto spec = p1_hamiltonian();
        const auto fwd = integrate(spec, {cfg.u0, 0}, {cfg.v0, 0}, cfg.t0, cfg.t1, icfg);
        const auto bwd = integrate(spec, fwd.u.back(), fwd.v.back(), cfg.t1, cfg.t0, icfg);
        const double r = std::abs(bwd.u.back() - cplx(cfg.u0)) + std::abs(bwd.v.back() - cplx(cfg.v0));
        rep.add("round-trip p1", r, cfg.tol_roundtrip, static_cast<int>(fwd.size()));
    }
    // harmonic closed form: V = x^2, u(t) = cos(sqrt(2) t) from (1, 0)
    {
        const auto spec = harmonic(1.0, 0.0);
        const auto tr = integrate(spec, {1.0, 0}, {0.0, 0}, 0.0, 1.0, icfg);
        double worst = 0.0;
        for (size_t i = 0; i < tr.size(); ++i)
            worst = std::max(worst, std::abs(tr.u[i] - std::cos(std::sqrt(2.0) * tr.t[i])));
        rep.add("harmonic closed form", worst, cfg.tol_roundtrip, static_cast<int>(tr.size()));
    }
    // free motion
    {
        const auto spec = harmonic(0.0, 0.0);
        const auto tr = integrate(spec, {0.3, 0}, {0.8, 0}, 0.0, 1.0, icfg);
        double worst = 0.0;
        for (size_t i = 0; i < tr.size(); ++i)
            worst = std::max(worst, std::abs(tr.u[i] - (0.3 + 0.8 * tr.t[i])));
        rep.add("free motion", worst, 1e-12, static_cast<int>(tr.size()));
    }
    // step-halving self-convergence for the fixed-step integrator
    {
        const auto spec = p1_hamiltonian();
        IntegratorConfig fine = icfg;
        fine.h = cfg.rk_h / 2.0;
        const auto a = integrate(spec, {0.0, 0}, {0.0, 0}, 0.0, 1.0, icfg);
        const auto b = integrate(spec, {0.0, 0}, {0.0, 0}, 0.0, 1.0, fine);
        rep.add("rk4 self-convergence", std::abs(a.u.back() - b.u.back()), 1e-8,
                static_cast<int>(a.size()));
    }
    return rep;
}

} // namespace painlab

#endif
