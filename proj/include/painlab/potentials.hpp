#ifndef PAINLAB_POTENTIALS_HPP
#define PAINLAB_POTENTIALS_HPP

#include <cmath>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "painlab/elliptic.hpp"
#include "painlab/errors.hpp"
#include "painlab/numdiff.hpp"

namespace painlab {

// Catalog of the time-dependent potentials in their two normalizations:
// the classification-normalized forms (monic leading coefficients) and the
// Hamiltonian forms matching the connection matrices. Both satisfy the
// functional equations; the Hamiltonian forms drive the dynamics and the
// connection checks.
enum class Family { Harmonic, P1, P2, P3, P4, P4Quartic, Calogero2, P5, P6 };
enum class Norm { Classification, Hamiltonian };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Harmonic: return "harmonic";
        case Family::P1: return "p1";
        case Family::P2: return "p2";
        case Family::P3: return "p3";
        case Family::P4: return "p4";
        case Family::P4Quartic: return "p4-quartic";
        case Family::Calogero2: return "calogero2";
        case Family::P5: return "p5";
        case Family::P6: return "p6";
    }
    return "?";
}

inline Family family_from_name(const std::string& s) {
    for (Family f : {Family::Harmonic, Family::P1, Family::P2, Family::P3, Family::P4,
                     Family::P4Quartic, Family::Calogero2, Family::P5, Family::P6})
        if (s == family_name(f)) return f;
    throw unknown_family_error("unknown potential family: " + s);
}

struct PotentialSpec {
    Family family = Family::Harmonic;
    Norm norm = Norm::Classification;
    bool quantum = false;
    std::map<std::string, double> params;

    double p(const std::string& key) const {
        auto it = params.find(key);
        if (it == params.end())
            throw unknown_family_error(std::string(family_name(family)) + ": missing parameter " + key);
        return it->second;
    }
};

// --- catalog constructors -------------------------------------------------

inline PotentialSpec harmonic(double a2, double a1 = 0.0) {
    return {Family::Harmonic, Norm::Classification, false, {{"a2", a2}, {"a1", a1}}};
}
inline PotentialSpec p1_classification() { return {Family::P1, Norm::Classification, false, {}}; }
inline PotentialSpec p1_hamiltonian() { return {Family::P1, Norm::Hamiltonian, false, {}}; }
inline PotentialSpec p2_classification(double alpha) {
    return {Family::P2, Norm::Classification, false, {{"alpha", alpha}}};
}
inline PotentialSpec p2_hamiltonian(double alpha) {
    return {Family::P2, Norm::Hamiltonian, false, {{"alpha", alpha}}};
}
inline PotentialSpec p3_classification(double a1, double a2, double a3, double a4) {
    return {Family::P3, Norm::Classification, false,
            {{"alpha1", a1}, {"alpha2", a2}, {"alpha3", a3}, {"alpha4", a4}}};
}
// Parameters of the second-order form 2*uddot = e^t(a e^{2u} + b e^{-2u}) + e^{2t}(c e^{4u} + d e^{-4u}).
inline PotentialSpec p3_hamiltonian(double alpha, double beta, double gamma, double delta) {
    return {Family::P3, Norm::Hamiltonian, false,
            {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}}};
}
// (nu, mu, rho) Hamiltonian parameterization: V = -nu^2 e^t cosh(2u-2rho) - mu^2 e^{2t} cosh(4u).
inline PotentialSpec p3_hamiltonian_from_nmr(double nu, double mu, double rho) {
    return p3_hamiltonian(2.0 * nu * nu * std::exp(-2.0 * rho), -2.0 * nu * nu * std::exp(2.0 * rho),
                          4.0 * mu * mu, -4.0 * mu * mu);
}
inline PotentialSpec p3_truncated(double nu) { return p3_hamiltonian(2.0 * nu * nu, -2.0 * nu * nu, 0.0, 0.0); }
inline PotentialSpec p4_classification(double alpha2, double nu) {
    return {Family::P4, Norm::Classification, false, {{"alpha2", alpha2}, {"nu", nu}}};
}
inline PotentialSpec p4_hamiltonian(double alpha, double beta) {
    return {Family::P4, Norm::Hamiltonian, false, {{"alpha", alpha}, {"beta", beta}}};
}
inline PotentialSpec p4_quartic(double nu) {
    return {Family::P4Quartic, Norm::Classification, false, {{"nu", nu}}};
}
inline PotentialSpec calogero2(double alpha2, double nu) {
    return {Family::Calogero2, Norm::Classification, false, {{"alpha2", alpha2}, {"nu", nu}}};
}
inline PotentialSpec p5_classification(double xi, double sigma, double zeta) {
    return {Family::P5, Norm::Classification, false, {{"xi", xi}, {"sigma", sigma}, {"zeta", zeta}}};
}
inline PotentialSpec p5_hamiltonian(double alpha, double beta, double gamma, double delta) {
    return {Family::P5, Norm::Hamiltonian, false,
            {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}}};
}
inline PotentialSpec p6(double alpha, double beta, double gamma, double delta) {
    return {Family::P6, Norm::Hamiltonian, false,
            {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta}}};
}

// --- conversions between the dual parameterizations ------------------------

// V_ham = -(1/8) V_cls under (alpha2, nu) = (-4 alpha, -2 beta).
inline PotentialSpec p4_to_hamiltonian(const PotentialSpec& cls) {
    return p4_hamiltonian(-cls.p("alpha2") / 4.0, -cls.p("nu") / 2.0);
}
inline PotentialSpec p4_to_classification(const PotentialSpec& ham) {
    return p4_classification(-4.0 * ham.p("alpha"), -2.0 * ham.p("beta"));
}
// (xi, sigma, zeta) -> (alpha, beta, gamma, delta) by expanding the
// hyperbolic squares.
inline PotentialSpec p5_to_hamiltonian(const PotentialSpec& cls) {
    const double xi = cls.p("xi"), sg = cls.p("sigma"), ze = cls.p("zeta");
    return p5_hamiltonian(2.0 * (xi + sg) * (xi + sg), -2.0 * ze * ze, 2.0 * sg - 1.0, -0.5);
}

// --- quantum parameter shifts ----------------------------------------------

// Returns the quantum-side parameters. Families without a listed shift are
// returned unchanged. For the classification-normalized quartic-sextic
// catalog entry the same shift reads nu -> nu + 1/8.
inline PotentialSpec quantum_shift(const PotentialSpec& spec) {
    PotentialSpec out = spec;
    out.quantum = true;
    switch (spec.family) {
        case Family::P4:
            if (spec.norm == Norm::Hamiltonian)
                out.params["beta"] = spec.p("beta") + 0.5;
            else
                out.params["nu"] = spec.p("nu") + 0.125;
            break;
        case Family::P5: {
            const PotentialSpec ham = (spec.norm == Norm::Hamiltonian) ? spec : p5_to_hamiltonian(spec);
            out = ham;
            out.quantum = true;
            out.params["alpha"] = ham.p("alpha") - 0.125;
            out.params["beta"] = ham.p("beta") + 0.125;
            break;
        }
        case Family::P6:
            out.params["alpha"] = spec.p("alpha") - 0.125;
            out.params["beta"] = spec.p("beta") + 0.125;
            out.params["gamma"] = spec.p("gamma") - 0.125;
            out.params["delta"] = spec.p("delta") + 0.125;
            break;
        default:
            break;
    }
    return out;
}

// --- evaluation -------------------------------------------------------------

namespace detail {

// integer powers by repeated multiplication; std::pow(0+0i, 0) is NaN.
inline cplx ipow(cplx x, int k) {
    if (k == 0) return 1.0;
    if (k < 0) return 1.0 / ipow(x, -k);
    cplx r = 1.0, base = x;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

struct pow_term {
    cplx c;   // coefficient at time t
    cplx ct;  // explicit time derivative of the coefficient
    double k; // power of x
};

struct exp_term {
    cplx c, ct;
    double a; // V term = c(t) exp(a x)
};

// csch^2 and sech^2 derivative chains, n <= 5.
inline cplx csch2_deriv(cplx x, int n) {
    const cplx s = 1.0 / (std::sinh(x) * std::sinh(x));
    const cplx c = std::cosh(x) / std::sinh(x);
    switch (n) {
        case 0: return s;
        case 1: return -2.0 * c * s;
        case 2: return 2.0 * s * (3.0 * s + 2.0);
        case 3: return -8.0 * c * s * (3.0 * s + 1.0);
        case 4: return 8.0 * s * (15.0 * s * s + 15.0 * s + 2.0);
        case 5: return -16.0 * c * s * (45.0 * s * s + 30.0 * s + 2.0);
    }
    throw degree_overflow_error("csch2_deriv: order > 5");
}

inline cplx sech2_deriv(cplx x, int n) {
    const cplx s = 1.0 / (std::cosh(x) * std::cosh(x));
    const cplx p = std::sinh(x) / std::cosh(x);
    switch (n) {
        case 0: return s;
        case 1: return -2.0 * p * s;
        case 2: return s * (4.0 - 6.0 * s);
        case 3: return 8.0 * p * s * (3.0 * s - 1.0);
        case 4: return 8.0 * s * (15.0 * s * s - 15.0 * s + 2.0);
        case 5: return -16.0 * p * s * (45.0 * s * s - 30.0 * s + 2.0);
    }
    throw degree_overflow_error("sech2_deriv: order > 5");
}

// cosh(k x) n-th derivative.
inline cplx cosh_deriv(cplx x, double k, int n) {
    const cplx arg = k * x;
    const double kn = std::pow(k, n);
    return kn * ((n % 2 == 0) ? std::cosh(arg) : std::sinh(arg));
}

// wp(z)^(n) via the differential equation, n <= 5.
inline cplx wp_deriv_n(cplx z, int n, const EllipticContext& ctx) {
    const cplx P = wp(z, ctx);
    const cplx P1 = wp_prime(z, ctx);
    const cplx g2 = 2.0 * (ctx.e[0] * ctx.e[0] + ctx.e[1] * ctx.e[1] + ctx.e[2] * ctx.e[2]);
    const cplx P2 = 6.0 * P * P - g2 / 2.0;
    const cplx P3 = 12.0 * P * P1;
    const cplx P4 = 12.0 * P1 * P1 + 12.0 * P * P2;
    const cplx P5 = 36.0 * P1 * P2 + 12.0 * P * P3;
    switch (n) {
        case 0: return P;
        case 1: return P1;
        case 2: return P2;
        case 3: return P3;
        case 4: return P4;
        case 5: return P5;
    }
    throw degree_overflow_error("wp_deriv_n: order > 5");
}

inline void p5_guard(cplx x) {
    if (std::abs(std::sinh(x)) < 1e-6 || std::abs(std::cosh(x)) < 1e-6)
        throw singularity_error("p5 potential: sinh x or cosh x vanishes");
}

inline void inverse_square_guard(cplx x) {
    if (std::abs(x) < 1e-7) throw singularity_error("potential with x^-2 term: x too close to 0");
}

// Power-term list (rational families).
inline std::vector<pow_term> power_terms(const PotentialSpec& s, cplx t) {
    switch (s.family) {
        case Family::Harmonic:
            return {{s.p("a2"), 0.0, 2}, {s.p("a1"), 0.0, 1}};
        case Family::P1:
            if (s.norm == Norm::Classification) return {{1.0, 0.0, 3}, {t / 2.0, 0.5, 1}};
            return {{-0.5, 0.0, 3}, {-t / 4.0, -0.25, 1}};
        case Family::P2: {
            const double al = s.p("alpha");
            if (s.norm == Norm::Classification)
                return {{1.0, 0.0, 4}, {t, 1.0, 2}, {-2.0 * al, 0.0, 1}};
            // -(x^2 + t/2)^2 / 2 + alpha x
            return {{-0.5, 0.0, 4}, {-t / 2.0, -0.5, 2}, {al, 0.0, 1}, {-t * t / 8.0, -t / 4.0, 0}};
        }
        case Family::P4: {
            if (s.norm == Norm::Classification) {
                const double a2 = s.p("alpha2"), nu = s.p("nu");
                return {{1.0, 0.0, 6}, {4.0 * t, 4.0, 4}, {4.0 * t * t + a2, 8.0 * t, 2}, {nu, 0.0, -2}};
            }
            const double al = s.p("alpha"), be = s.p("beta");
            return {{-0.125, 0.0, 6}, {-t / 2.0, -0.5, 4},
                    {-0.5 * (t * t - al), -t, 2}, {be / 4.0, 0.0, -2}};
        }
        case Family::P4Quartic: {
            const double nu = s.p("nu");
            return {{1.0, 0.0, 4}, {2.0 * t, 2.0, 2}, {nu, 0.0, -2}};
        }
        case Family::Calogero2: {
            const double a2 = s.p("alpha2"), nu = s.p("nu");
            return {{a2, 0.0, 2}, {nu, 0.0, -2}};
        }
        default:
            throw unknown_family_error("power_terms: not a rational family");
    }
}

inline std::vector<exp_term> p3_exp_terms(const PotentialSpec& s, cplx t) {
    const cplx e2t = std::exp(2.0 * t), e1t = std::exp(t);
    if (s.norm == Norm::Classification) {
        const double a1 = s.p("alpha1"), a2 = s.p("alpha2"), a3 = s.p("alpha3"), a4 = s.p("alpha4");
        return {{a1 * e2t, 2.0 * a1 * e2t, 4.0},
                {a2 * e2t, 2.0 * a2 * e2t, -4.0},
                {a3 * e1t, a3 * e1t, 2.0},
                {a4 * e1t, a4 * e1t, -2.0}};
    }
    const double al = s.p("alpha"), be = s.p("beta"), ga = s.p("gamma"), de = s.p("delta");
    return {{-ga / 8.0 * e2t, -ga / 4.0 * e2t, 4.0},
            {de / 8.0 * e2t, de / 4.0 * e2t, -4.0},
            {-al / 4.0 * e1t, -al / 4.0 * e1t, 2.0},
            {be / 4.0 * e1t, be / 4.0 * e1t, -2.0}};
}

// P5 terms: A(t) csch^2 + B(t) sech^2 + C(t) cosh 2x + D(t) cosh 4x.
struct p5_terms {
    cplx A, At, B, Bt, C, Ct, D, Dt;
};

inline p5_terms p5_term_data(const PotentialSpec& s, cplx t) {
    p5_terms r{};
    const cplx e2t = std::exp(2.0 * t), e4t = std::exp(4.0 * t);
    if (s.norm == Norm::Classification) {
        const double xi = s.p("xi"), sg = s.p("sigma"), ze = s.p("zeta");
        r.A = -2.0 * (xi + sg) * (xi + sg);
        r.B = 2.0 * ze * ze;
        r.C = (2.0 * sg - 1.0) / 2.0 * e2t;
        r.Ct = (2.0 * sg - 1.0) * e2t;
        r.D = -e4t / 16.0;
        r.Dt = -e4t / 4.0;
    } else {
        const double al = s.p("alpha"), be = s.p("beta"), ga = s.p("gamma"), de = s.p("delta");
        r.A = -al;
        r.B = -be;
        r.C = ga / 2.0 * e2t;
        r.Ct = ga * e2t;
        r.D = de / 8.0 * e4t;
        r.Dt = de / 2.0 * e4t;
    }
    return r;
}

} // namespace detail

// n-th x-derivative of V (n = 0 gives V itself), explicit-time partial for t.
// All derivatives are closed-form; no finite differences on this path.
inline cplx eval_dnVdx(const PotentialSpec& s, int n, cplx x, cplx t,
                       const EllipticContext* ctx6 = nullptr) {
    if (n < 0 || n > 5) throw degree_overflow_error("eval_dnVdx: order must be 0..5");
    switch (s.family) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2: {
            bool has_pole = (s.family == Family::P4 || s.family == Family::P4Quartic ||
                             s.family == Family::Calogero2);
            if (has_pole) detail::inverse_square_guard(x);
            cplx sum = 0.0;
            for (const auto& term : detail::power_terms(s, t)) {
                double fac = 1.0, k = term.k;
                for (int j = 0; j < n; ++j) fac *= (k - j);
                if (fac == 0.0) continue;
                sum += term.c * fac * detail::ipow(x, static_cast<int>(k) - n);
            }
            return sum;
        }
        case Family::P3: {
            cplx sum = 0.0;
            for (const auto& term : detail::p3_exp_terms(s, t))
                sum += term.c * std::pow(term.a, n) * std::exp(term.a * x);
            return sum;
        }
        case Family::P5: {
            detail::p5_guard(x);
            const auto d = detail::p5_term_data(s, t);
            return d.A * detail::csch2_deriv(x, n) + d.B * detail::sech2_deriv(x, n) +
                   d.C * detail::cosh_deriv(x, 2.0, n) + d.D * detail::cosh_deriv(x, 4.0, n);
        }
        case Family::P6: {
            EllipticContext local;
            const EllipticContext* ctx = ctx6;
            if (!ctx) {
                local = EllipticContext(tau_from_t(t));
                ctx = &local;
            }
            const double coef[4] = {s.p("alpha"), s.p("beta"), s.p("gamma"), s.p("delta")};
            cplx sum = 0.0;
            for (int k = 0; k < 4; ++k)
                sum += coef[k] * detail::wp_deriv_n(x + ctx->omegas[static_cast<size_t>(k)], n, *ctx);
            return sum;
        }
    }
    throw unknown_family_error("eval_dnVdx: unhandled family");
}

inline cplx eval_V(const PotentialSpec& s, cplx x, cplx t, const EllipticContext* ctx6 = nullptr) {
    return eval_dnVdx(s, 0, x, t, ctx6);
}
inline cplx eval_dVdx(const PotentialSpec& s, cplx x, cplx t, const EllipticContext* ctx6 = nullptr) {
    return eval_dnVdx(s, 1, x, t, ctx6);
}

// Explicit time partial of V at fixed x.
inline cplx eval_dVdt(const PotentialSpec& s, cplx x, cplx t, const EllipticContext* ctx6 = nullptr) {
    switch (s.family) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2: {
            cplx sum = 0.0;
            for (const auto& term : detail::power_terms(s, t))
                if (term.ct != 0.0) sum += term.ct * detail::ipow(x, static_cast<int>(term.k));
            return sum;
        }
        case Family::P3: {
            cplx sum = 0.0;
            for (const auto& term : detail::p3_exp_terms(s, t))
                sum += term.ct * std::exp(term.a * x);
            return sum;
        }
        case Family::P5: {
            detail::p5_guard(x);
            const auto d = detail::p5_term_data(s, t);
            return d.Ct * std::cosh(2.0 * x) + d.Dt * std::cosh(4.0 * x);
        }
        case Family::P6: {
            EllipticContext local;
            const EllipticContext* ctx = ctx6;
            if (!ctx) {
                local = EllipticContext(tau_from_t(t));
                ctx = &local;
            }
            const double coef[4] = {s.p("alpha"), s.p("beta"), s.p("gamma"), s.p("delta")};
            cplx sum = 0.0;
            for (int k = 0; k < 4; ++k)
                sum += coef[k] * dtau_wp_shifted(x, k, *ctx);
            return 2.0 * pi * iu * sum; // d/dt = 2 pi i d/dtau
        }
    }
    throw unknown_family_error("eval_dVdt: unhandled family");
}

// n-th x-derivative of the explicit time partial, d^n/dx^n dV/dt, n <= 3.
inline cplx eval_dnVdxdt(const PotentialSpec& s, int n, cplx x, cplx t,
                         const EllipticContext* ctx6 = nullptr) {
    if (n < 0 || n > 3) throw degree_overflow_error("eval_dnVdxdt: order must be 0..3");
    switch (s.family) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2: {
            cplx sum = 0.0;
            for (const auto& term : detail::power_terms(s, t)) {
                if (term.ct == 0.0) continue;
                double fac = 1.0, k = term.k;
                for (int j = 0; j < n; ++j) fac *= (k - j);
                if (fac == 0.0) continue;
                sum += term.ct * fac * detail::ipow(x, static_cast<int>(k) - n);
            }
            return sum;
        }
        case Family::P3: {
            cplx sum = 0.0;
            for (const auto& term : detail::p3_exp_terms(s, t))
                sum += term.ct * std::pow(term.a, n) * std::exp(term.a * x);
            return sum;
        }
        case Family::P5: {
            detail::p5_guard(x);
            const auto d = detail::p5_term_data(s, t);
            return d.Ct * detail::cosh_deriv(x, 2.0, n) + d.Dt * detail::cosh_deriv(x, 4.0, n);
        }
        case Family::P6: {
            EllipticContext local;
            const EllipticContext* ctx = ctx6;
            if (!ctx) {
                local = EllipticContext(tau_from_t(t));
                ctx = &local;
            }
            // d/dz^n of dtau_wp, using E1' = -E2, E2' = wp', and the wp chain.
            auto dtau_wp_dn = [&](cplx z, int m) -> cplx {
                const cplx E1 = e1(z, *ctx), E2 = e2(z, *ctx);
                auto P = [&](int k) { return detail::wp_deriv_n(z, k, *ctx); };
                switch (m) {
                    case 0: return dtau_wp(z, *ctx);
                    case 1: return kappa * (E1 * P(2) - 3.0 * E2 * P(1) + 0.5 * P(3));
                    case 2: return kappa * (E1 * P(3) - 4.0 * E2 * P(2) - 3.0 * P(1) * P(1) + 0.5 * P(4));
                    case 3:
                        return kappa * (E1 * P(4) - 5.0 * E2 * P(3) - 10.0 * P(1) * P(2) + 0.5 * P(5));
                }
                throw degree_overflow_error("dtau_wp_dn");
            };
            static const double domega[4] = {0.0, 0.0, 0.5, 0.5};
            const double coef[4] = {s.p("alpha"), s.p("beta"), s.p("gamma"), s.p("delta")};
            cplx sum = 0.0;
            for (int k = 0; k < 4; ++k) {
                const cplx z = x + ctx->omegas[static_cast<size_t>(k)];
                sum += coef[k] * (dtau_wp_dn(z, n) + detail::wp_deriv_n(z, n + 1, *ctx) * domega[k]);
            }
            return 2.0 * pi * iu * sum;
        }
    }
    throw unknown_family_error("eval_dnVdxdt: unhandled family");
}

// --- change-of-variable maps -------------------------------------------------

enum class MapVar { DynamicalU, SpectralX };

struct MappedPoint {
    cplx value; // y(u,t) or X(x,t)
    cplx T;     // T(t)
};

inline MappedPoint coordinate_map(Family f, MapVar which, cplx v, cplx t) {
    switch (f) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
            return {v, t};
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2:
            return {v * v, t};
        case Family::P3:
            return {std::exp(2.0 * v), std::exp(t)};
        case Family::P5: {
            if (which == MapVar::DynamicalU) {
                const cplx sh = std::sinh(v);
                if (std::abs(sh) < 1e-12) throw singularity_error("coordinate_map p5: sinh u = 0");
                const cplx c = std::cosh(v) / sh;
                return {c * c, std::exp(2.0 * t)};
            }
            const cplx ch = std::cosh(v);
            return {ch * ch, std::exp(2.0 * t)};
        }
        case Family::P6: {
            EllipticContext ctx(tau_from_t(t));
            return {map_X(v, ctx), modulus_T(ctx)};
        }
    }
    throw unknown_family_error("coordinate_map: unhandled family");
}

// Principal-branch inverses, restricted to real inputs in the branch-valid
// region. Out-of-region requests get a branch error.
inline cplx inverse_coordinate_map(Family f, MapVar which, cplx mapped, cplx /*t*/) {
    switch (f) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
            return mapped;
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2:
            if (mapped.real() < 0.0 && std::abs(mapped.imag()) < 1e-14)
                throw branch_error("inverse map: negative real square");
            return std::sqrt(mapped);
        case Family::P3:
            return 0.5 * std::log(mapped);
        case Family::P5: {
            if (std::abs(mapped.imag()) > 1e-12 || mapped.real() <= 1.0)
                throw branch_error("inverse map p5: need real value > 1 on the principal branch");
            const double m = mapped.real();
            if (which == MapVar::DynamicalU) {
                // y = coth^2 u, u > 0
                return std::atanh(1.0 / std::sqrt(m));
            }
            return std::acosh(std::sqrt(m));
        }
        case Family::P6:
            throw branch_error("inverse map p6: not provided");
    }
    throw unknown_family_error("inverse_coordinate_map: unhandled family");
}

} // namespace painlab

#endif
