#ifndef PAINLAB_ELLIPTIC_HPP
#define PAINLAB_ELLIPTIC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

#include "painlab/errors.hpp"
#include "painlab/numdiff.hpp"

namespace painlab {

// Jacobi theta conventions used throughout:
//   theta1(z) = -sum_k exp(i pi tau (k+1/2)^2 + 2 pi i (z+1/2)(k+1/2))
//   theta2(z) =  sum_k exp(i pi tau (k+1/2)^2 + 2 pi i z (k+1/2))
//   theta3(z) =  sum_k exp(i pi tau k^2     + 2 pi i z k)
//   theta0(z) =  sum_k exp(i pi tau k^2     + 2 pi i (z+1/2) k)
// theta_a has simple zeros on omega_{a-1} + Z + Z tau, with
// omega_0 = 0, omega_1 = 1/2, omega_2 = (1+tau)/2, omega_3 = tau/2.

struct EllipticContext {
    cplx tau;
    cplx q_half;            // exp(i pi tau)
    int trunc = 0;          // series truncation index
    double tail_tol = 1e-16;
    double lattice_radius = 1e-3;

    std::array<cplx, 4> omegas{}; // omega_0..omega_3
    cplx eta{};                   // -theta1'''(0)/(6 theta1'(0))
    std::array<cplx, 3> e{};      // wp at the half-periods omega_1..omega_3

    // cached theta-null data
    cplx th1p0{};                  // theta1'(0)
    cplx th1p3_0{};                // theta1'''(0)
    cplx th1p5_0{};                // theta1^(5)(0)
    std::array<cplx, 4> null0{};   // theta_a(0), a = 0..3 (null0[1] == 0)

    EllipticContext() = default;
    explicit EllipticContext(cplx tau_, double tail = 1e-16, double excl = 1e-3);
};

namespace detail {

inline int truncation_index(cplx tau, double tail_tol) {
    const double im = tau.imag();
    // |q|^(N^2) <= tail  with |q| = exp(-pi Im tau)
    const double n2 = -std::log(tail_tol) / (pi * im);
    int n = static_cast<int>(std::ceil(std::sqrt(std::max(n2, 1.0)))) + 4;
    return std::clamp(n, 8, 4096);
}

// Raw truncated q-series for theta_a^{(order)}(z), no argument reduction.
// Exposed (through theta_series_raw) so tests can run it at a higher
// truncation as an independent oracle.
inline cplx theta_series(int a, cplx z, cplx tau, int n_terms, int order) {
    cplx sum = 0.0;
    const cplx ipt = iu * pi * tau;
    const cplx tpi = 2.0 * pi * iu;
    if (a == 1 || a == 2) {
        const cplx zz = (a == 1) ? z + 0.5 : z;
        for (int k = n_terms; k >= 0; --k) {
            for (double m : {k + 0.5, -k - 0.5}) {
                cplx term = std::exp(ipt * m * m + tpi * zz * m);
                if (order > 0) term *= std::pow(tpi * m, order);
                sum += term;
            }
        }
        return (a == 1) ? -sum : sum;
    }
    const cplx zz = (a == 0) ? z + 0.5 : z;
    if (order == 0) sum = 1.0; // k = 0 term
    for (int k = n_terms; k >= 1; --k) {
        for (double m : {double(k), double(-k)}) {
            cplx term = std::exp(ipt * m * m + tpi * zz * m);
            if (order > 0) term *= std::pow(tpi * m, order);
            sum += term;
        }
    }
    return sum;
}

struct reduced_arg {
    cplx z0;       // z - m - n tau, in (a neighbourhood of) the fundamental cell
    long m = 0, n = 0;
    int sign = 1;  // (+-1)^m (+-1)^n factor, depends on the index a
};

inline reduced_arg reduce(int a, cplx z, cplx tau) {
    reduced_arg r;
    r.n = std::lround(z.imag() / tau.imag());
    cplx z1 = z - static_cast<double>(r.n) * tau;
    r.m = std::lround(z1.real());
    r.z0 = z1 - static_cast<double>(r.m);
    const bool m_odd = (r.m % 2) != 0;
    const bool n_odd = (r.n % 2) != 0;
    switch (a) {
        case 1: r.sign = (m_odd ? -1 : 1) * (n_odd ? -1 : 1); break;
        case 2: r.sign = (m_odd ? -1 : 1); break;
        case 3: r.sign = 1; break;
        case 0: r.sign = (n_odd ? -1 : 1); break;
        default: throw unknown_family_error("theta index must be 0..3");
    }
    return r;
}

inline double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

} // namespace detail

inline EllipticContext::EllipticContext(cplx tau_, double tail, double excl)
    : tau(tau_), tail_tol(tail), lattice_radius(excl) {
    if (!(tau.imag() > 0.0))
        throw divergence_error("modular parameter needs Im tau > 0");
    q_half = std::exp(iu * pi * tau);
    trunc = detail::truncation_index(tau, tail_tol);
    omegas = {cplx(0.0), cplx(0.5), (1.0 + tau) / 2.0, tau / 2.0};
    th1p0 = detail::theta_series(1, 0.0, tau, trunc, 1);
    th1p3_0 = detail::theta_series(1, 0.0, tau, trunc, 3);
    th1p5_0 = detail::theta_series(1, 0.0, tau, trunc, 5);
    for (int a : {0, 2, 3}) null0[static_cast<size_t>(a)] = detail::theta_series(a, 0.0, tau, trunc, 0);
    null0[1] = 0.0;
    eta = -th1p3_0 / (6.0 * th1p0);
    // e_k = wp(omega_k); wp is defined below, so compute inline from the
    // squared theta ratio wp - e_k form is not available yet. Use the
    // log-derivative definition directly.
    auto wp_raw = [&](cplx z) {
        cplx f = detail::theta_series(1, z, tau, trunc, 0);
        cplx f1 = detail::theta_series(1, z, tau, trunc, 1);
        cplx f2 = detail::theta_series(1, z, tau, trunc, 2);
        const cplx g1 = f1 / f;
        return -(f2 / f - g1 * g1) - 2.0 * eta;
    };
    for (int k = 1; k <= 3; ++k) e[static_cast<size_t>(k - 1)] = wp_raw(omegas[static_cast<size_t>(k)]);
}

// Distance from z to the period lattice Z + Z tau.
inline double lattice_distance(cplx z, const EllipticContext& ctx) {
    const auto r = detail::reduce(1, z, ctx.tau);
    double d = std::abs(r.z0);
    for (int p = -1; p <= 1; ++p)
        for (int q = -1; q <= 1; ++q)
            d = std::min(d, std::abs(r.z0 - (static_cast<double>(p) + static_cast<double>(q) * ctx.tau)));
    return d;
}

// theta_a^{(order)}(z | tau), with argument reduction to the fundamental
// cell and exact quasi-periodicity factors. order <= 6.
inline cplx theta_derivs(int a, cplx z, int order, const EllipticContext& ctx) {
    if (a < 0 || a > 3) throw unknown_family_error("theta index must be 0..3");
    if (order < 0 || order > 6) throw degree_overflow_error("theta derivative order must be 0..6");
    const auto r = detail::reduce(a, z, ctx.tau);
    // theta(z) = sign * C * exp(w z) * theta(z0(z)), w = -2 pi i n,
    // C = exp(i pi tau n^2 + w(-m - n tau))  folded into a single exponent.
    const double n = static_cast<double>(r.n);
    const cplx w = -2.0 * pi * iu * n;
    const cplx expo = -iu * pi * ctx.tau * n * n - 2.0 * pi * iu * n * r.z0;
    if (expo.real() > 650.0)
        throw divergence_error("theta quasi-periodicity factor overflows; argument too far from the fundamental strip");
    // Leibniz on exp(w z) * theta(z0): exp(w z)|_here = exp(expo - i pi tau n^2 ... )
    // Collected so that the order-0 factor equals sign * exp(expo).
    cplx sum = 0.0;
    for (int j = 0; j <= order; ++j) {
        cplx dj = detail::theta_series(a, r.z0, ctx.tau, ctx.trunc, j);
        sum += detail::binom(order, j) * std::pow(w, order - j) * dj;
    }
    return static_cast<double>(r.sign) * std::exp(expo) * sum;
}

inline cplx theta(int a, cplx z, const EllipticContext& ctx) { return theta_derivs(a, z, 0, ctx); }

// Independent direct summation at a chosen truncation; test oracle.
inline cplx theta_series_raw(int a, cplx z, cplx tau, int n_terms, int order = 0) {
    if (!(tau.imag() > 0.0)) throw divergence_error("Im tau must be positive");
    return detail::theta_series(a, z, tau, n_terms, order);
}

namespace detail {

inline void require_off_lattice(cplx z, const EllipticContext& ctx, const char* what) {
    if (lattice_distance(z, ctx) < ctx.lattice_radius)
        throw singularity_error(std::string(what) + ": argument within the lattice exclusion radius");
}

inline log_derivs log_theta1_derivs(cplx z, const EllipticContext& ctx) {
    const cplx f = theta_derivs(1, z, 0, ctx);
    return log_derivatives(f, theta_derivs(1, z, 1, ctx), theta_derivs(1, z, 2, ctx),
                           theta_derivs(1, z, 3, ctx), theta_derivs(1, z, 4, ctx));
}

} // namespace detail

// Weierstrass wp(z) = -d^2/dz^2 log theta1(z) - 2 eta.
inline cplx wp(cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(z, ctx, "wp");
    return -detail::log_theta1_derivs(z, ctx).d2 - 2.0 * ctx.eta;
}

// wp'(z) from the triple-theta product formula.
inline cplx wp_prime(cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(z, ctx, "wp_prime");
    const cplx num = theta(2, z, ctx) * theta(3, z, ctx) * theta(0, z, ctx);
    const cplx th1 = theta(1, z, ctx);
    const cplx c = -2.0 * ctx.th1p0 * ctx.th1p0 * ctx.th1p0 /
                   (ctx.null0[2] * ctx.null0[3] * ctx.null0[0]);
    return c * num / (th1 * th1 * th1);
}

// wp'' and wp''' from higher log-derivatives of theta1.
inline cplx wp_deriv2(cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(z, ctx, "wp_deriv2");
    return -detail::log_theta1_derivs(z, ctx).d4;
}

// E1 = d/dz log theta1, E2 = -d/dz E1 = wp + 2 eta.
inline cplx eisenstein(int order, cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(z, ctx, "eisenstein");
    const auto ld = detail::log_theta1_derivs(z, ctx);
    if (order == 1) return ld.d1;
    if (order == 2) return -ld.d2;
    throw unknown_family_error("eisenstein order must be 1 or 2");
}

inline cplx e1(cplx z, const EllipticContext& ctx) { return eisenstein(1, z, ctx); }
inline cplx e2(cplx z, const EllipticContext& ctx) { return eisenstein(2, z, ctx); }

// E2'(z) = -d^3/dz^3 log theta1 = wp'(z); computed through log-derivatives
// so it stays independent of the product formula behind wp_prime.
inline cplx e2_prime(cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(z, ctx, "e2_prime");
    return -detail::log_theta1_derivs(z, ctx).d3;
}

// Phi(u, z) = theta1(u+z) theta1'(0) / (theta1(u) theta1(z)).
inline cplx phi(cplx u, cplx z, const EllipticContext& ctx) {
    detail::require_off_lattice(u, ctx, "phi");
    detail::require_off_lattice(z, ctx, "phi");
    return theta(1, u + z, ctx) * ctx.th1p0 / (theta(1, u, ctx) * theta(1, z, ctx));
}

inline cplx phi_dz(cplx u, cplx z, const EllipticContext& ctx) {
    return phi(u, z, ctx) * (e1(u + z, ctx) - e1(z, ctx));
}

// varphi_j(z) = exp(2 pi i z dtau(omega_j)) Phi(z, omega_j), j = 1..3.
// dtau(omega_j) = 0, 1/2, 1/2.
inline cplx varphi(int j, cplx z, const EllipticContext& ctx) {
    if (j < 1 || j > 3) throw unknown_family_error("varphi index must be 1..3");
    const cplx base = phi(z, ctx.omegas[static_cast<size_t>(j)], ctx);
    if (j == 1) return base;
    return std::exp(pi * iu * z) * base;
}

// ---------------------------------------------------------------------------
// Analytic tau-derivatives, closed forms obtained from the heat equation.
// Identity *checks* never use these; they difference the series in tau.
// ---------------------------------------------------------------------------

inline cplx dtau_e1(cplx z, const EllipticContext& ctx) {
    return -kappa * (e1(z, ctx) * e2(z, ctx) + 0.5 * wp_prime(z, ctx));
}

inline cplx dtau_e2(cplx z, const EllipticContext& ctx) {
    const cplx E2 = e2(z, ctx);
    return kappa * (e1(z, ctx) * e2_prime(z, ctx) - E2 * E2 + 0.5 * wp_deriv2(z, ctx));
}

inline cplx dtau_eta(const EllipticContext& ctx) {
    // eta = -theta1'''(0)/(6 theta1'(0)); dtau theta^{(k)} = theta^{(k+2)}/(4 pi i).
    const cplx num = ctx.th1p5_0 * ctx.th1p0 - ctx.th1p3_0 * ctx.th1p3_0;
    return -num / (6.0 * (4.0 * pi * iu) * ctx.th1p0 * ctx.th1p0);
}

inline cplx dtau_wp(cplx z, const EllipticContext& ctx) {
    return dtau_e2(z, ctx) - 2.0 * dtau_eta(ctx);
}

// d/dtau of wp(x + omega_k(tau); tau) at fixed x, including the drift of the
// half-period itself.
inline cplx dtau_wp_shifted(cplx x, int k, const EllipticContext& ctx) {
    static const double domega[4] = {0.0, 0.0, 0.5, 0.5};
    const cplx z = x + ctx.omegas[static_cast<size_t>(k)];
    return dtau_wp(z, ctx) + wp_prime(z, ctx) * domega[k];
}

// ---------------------------------------------------------------------------
// The algebraic modulus maps X(x), T shared by the elliptic change of
// variables.
// ---------------------------------------------------------------------------

inline cplx modulus_T(const EllipticContext& ctx) {
    return (ctx.e[2] - ctx.e[0]) / (ctx.e[1] - ctx.e[0]);
}

inline cplx map_X(cplx x, const EllipticContext& ctx) {
    return (wp(x, ctx) - ctx.e[0]) / (ctx.e[1] - ctx.e[0]);
}

inline cplx map_X_dx(cplx x, const EllipticContext& ctx) {
    return wp_prime(x, ctx) / (ctx.e[1] - ctx.e[0]);
}

// z = a + b tau; samplers use lattice coordinates so that near-degenerate
// tau keeps arguments inside the fundamental cell.
inline cplx from_lattice_coords(double a, double b, const EllipticContext& ctx) {
    return a + b * ctx.tau;
}

} // namespace painlab

#endif
