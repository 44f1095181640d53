#ifndef PAINLAB_DYNAMICS_HPP
#define PAINLAB_DYNAMICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "painlab/errors.hpp"
#include "painlab/funceq.hpp"
#include "painlab/numdiff.hpp"
#include "painlab/potentials.hpp"

namespace painlab {

// The b-shape each family pairs with; fixes the classical-vs-quantum
// correction applied when a quantum-side spec drives the dynamics.
inline BShape default_bshape(Family f) {
    switch (f) {
        case Family::Harmonic:
        case Family::P1:
        case Family::P2:
            return BShape::RatOne;
        case Family::P3:
            return BShape::HypOne;
        case Family::P4:
        case Family::P4Quartic:
        case Family::Calogero2:
            return BShape::RatTwo;
        case Family::P5:
            return BShape::HypTwo;
        case Family::P6:
            return BShape::ThetaTwo;
    }
    return BShape::RatOne;
}

// Classical potential value at u. Quantum-side specs of two-zero families
// acquire the (1/2) d^2 log b correction at 2u; classical specs pass through.
inline cplx classical_V(const PotentialSpec& spec, cplx u, double t) {
    cplx v = eval_V(spec, u, t);
    if (spec.quantum) v += classical_quantum_correction(default_bshape(spec.family), u, t);
    return v;
}

inline cplx classical_dVdt(const PotentialSpec& spec, cplx u, double t) {
    cplx v = eval_dVdt(spec, u, t);
    if (spec.quantum && default_bshape(spec.family) == BShape::ThetaTwo) {
        EllipticContext ctx(tau_from_t(cplx(t)));
        v += -0.5 * 2.0 * pi * iu * (dtau_wp(2.0 * u, ctx) + 2.0 * dtau_eta(ctx));
    }
    return v;
}

// force = -d/du of the classical potential.
inline cplx force(const PotentialSpec& spec, cplx u, double t) {
    cplx f = -eval_dVdx(spec, u, t);
    if (spec.quantum) {
        switch (default_bshape(spec.family)) {
            case BShape::RatTwo:
                f -= 1.0 / (4.0 * u * u * u);
                break;
            case BShape::HypTwo:
                f += detail::csch2_deriv(2.0 * u, 1);
                break;
            case BShape::ThetaTwo: {
                EllipticContext ctx(tau_from_t(cplx(t)));
                f += wp_prime(2.0 * u, ctx);
                break;
            }
            default:
                break;
        }
    }
    return f;
}

struct IntegratorConfig {
    enum class Method { RK4, AdaptiveCK };
    Method method = Method::RK4;
    double h = 1e-3;
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double singular_radius = 0.05;
    int max_steps = 4'000'000;
};

struct Trajectory {
    std::vector<double> t;
    std::vector<cplx> u, v, H;

    size_t size() const { return t.size(); }

    // Cubic Hermite interpolation on the stored samples.
    cplx u_at(double tt) const { return hermite(tt, u, v); }
    cplx v_at(double tt) const { return hermite(tt, v, a); }
    cplx a_at(double tt) const { return hermite(tt, a, adot_est); }

    std::vector<cplx> a;        // force samples
    std::vector<cplx> adot_est; // centered estimate, interpolation helper

private:
    cplx hermite(double tt, const std::vector<cplx>& y, const std::vector<cplx>& yp) const {
        if (t.size() < 2) throw step_failure_error("trajectory too short to interpolate");
        const double t0 = t.front(), t1 = t.back();
        const bool fwd = t1 > t0;
        double lo = std::min(t0, t1), hi = std::max(t0, t1);
        if (tt < lo - 1e-12 || tt > hi + 1e-12)
            throw step_failure_error("interpolation time outside the trajectory span");
        size_t i = 1;
        if (fwd) {
            while (i + 1 < t.size() && t[i] < tt) ++i;
        } else {
            while (i + 1 < t.size() && t[i] > tt) ++i;
        }
        const double ta = t[i - 1], tb = t[i], hseg = tb - ta;
        const double s = (tt - ta) / hseg;
        const double s2 = s * s, s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s, h01 = -2 * s3 + 3 * s2,
                     h11 = s3 - s2;
        return h00 * y[i - 1] + h10 * hseg * yp[i - 1] + h01 * y[i] + h11 * hseg * yp[i];
    }
};

namespace detail {

inline bool pole_guarded(const PotentialSpec& s) {
    switch (s.family) {
        case Family::P4:
            return s.norm == Norm::Hamiltonian ? s.p("beta") != 0.0 : s.p("nu") != 0.0;
        case Family::P4Quartic:
        case Family::Calogero2:
            return s.p("nu") != 0.0 || s.quantum;
        case Family::P5:
            return true;
        default:
            return false;
    }
}

struct state {
    cplx u, v;
};

template <typename FF>
state rk4_step(const FF& f, double t, const state& y, double h) {
    auto eval = [&](double tt, const state& s) { return state{s.v, f(s.u, tt)}; };
    const state k1 = eval(t, y);
    const state k2 = eval(t + h / 2, {y.u + h / 2 * k1.u, y.v + h / 2 * k1.v});
    const state k3 = eval(t + h / 2, {y.u + h / 2 * k2.u, y.v + h / 2 * k2.v});
    const state k4 = eval(t + h, {y.u + h * k3.u, y.v + h * k3.v});
    return {y.u + h / 6 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            y.v + h / 6 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v)};
}

// Cash-Karp embedded 4(5) pair.
template <typename FF>
state ck_step(const FF& f, double t, const state& y, double h, double& err) {
    static const double a2 = 0.2, a3 = 0.3, a4 = 0.6, a5 = 1.0, a6 = 0.875;
    static const double b21 = 0.2, b31 = 3.0 / 40, b32 = 9.0 / 40, b41 = 0.3, b42 = -0.9,
                        b43 = 1.2, b51 = -11.0 / 54, b52 = 2.5, b53 = -70.0 / 27, b54 = 35.0 / 27,
                        b61 = 1631.0 / 55296, b62 = 175.0 / 512, b63 = 575.0 / 13824,
                        b64 = 44275.0 / 110592, b65 = 253.0 / 4096;
    static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594, c6 = 512.0 / 1771;
    static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                        d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336, d6 = c6 - 0.25;
    auto eval = [&](double tt, const state& s) { return state{s.v, f(s.u, tt)}; };
    const state k1 = eval(t, y);
    const state k2 = eval(t + a2 * h, {y.u + h * b21 * k1.u, y.v + h * b21 * k1.v});
    const state k3 = eval(t + a3 * h, {y.u + h * (b31 * k1.u + b32 * k2.u), y.v + h * (b31 * k1.v + b32 * k2.v)});
    const state k4 = eval(t + a4 * h, {y.u + h * (b41 * k1.u + b42 * k2.u + b43 * k3.u),
                                       y.v + h * (b41 * k1.v + b42 * k2.v + b43 * k3.v)});
    const state k5 = eval(t + a5 * h, {y.u + h * (b51 * k1.u + b52 * k2.u + b53 * k3.u + b54 * k4.u),
                                       y.v + h * (b51 * k1.v + b52 * k2.v + b53 * k3.v + b54 * k4.v)});
    const state k6 = eval(t + a6 * h,
                          {y.u + h * (b61 * k1.u + b62 * k2.u + b63 * k3.u + b64 * k4.u + b65 * k5.u),
                           y.v + h * (b61 * k1.v + b62 * k2.v + b63 * k3.v + b64 * k4.v + b65 * k5.v)});
    const state out{y.u + h * (c1 * k1.u + c3 * k3.u + c4 * k4.u + c6 * k6.u),
                    y.v + h * (c1 * k1.v + c3 * k3.v + c4 * k4.v + c6 * k6.v)};
    const cplx eu = h * (d1 * k1.u + d3 * k3.u + d4 * k4.u + d5 * k5.u + d6 * k6.u);
    const cplx ev = h * (d1 * k1.v + d3 * k3.v + d4 * k4.v + d5 * k5.v + d6 * k6.v);
    err = std::max(std::abs(eu), std::abs(ev));
    return out;
}

} // namespace detail

inline Trajectory integrate(const PotentialSpec& spec, cplx u0, cplx v0, double t0, double t1,
                            const IntegratorConfig& cfg = {}) {
    if (cfg.h <= 0.0 || cfg.abs_tol <= 0.0 || cfg.rel_tol <= 0.0)
        throw config_error("integrate: steps and tolerances must be positive");
    const bool guard = detail::pole_guarded(spec);
    auto f = [&](cplx u, double t) { return force(spec, u, t); };
    auto record = [&](Trajectory& tr, double t, const detail::state& s) {
        tr.t.push_back(t);
        tr.u.push_back(s.u);
        tr.v.push_back(s.v);
        tr.a.push_back(f(s.u, t));
        tr.H.push_back(0.5 * s.v * s.v + classical_V(spec, s.u, t));
    };
    auto check_guard = [&](double t, const detail::state& s, const detail::state& prev, double tprev) {
        if (guard && std::abs(s.u) < cfg.singular_radius)
            throw singularity_approach_error("integration stopped near a movable singularity", tprev,
                                             prev.u, prev.v);
        (void)t;
    };

    Trajectory tr;
    detail::state y{u0, v0};
    const double span = t1 - t0;
    if (span == 0.0) {
        record(tr, t0, y);
        tr.adot_est.assign(1, 0.0);
        return tr;
    }
    if (guard && std::abs(u0) < cfg.singular_radius)
        throw singularity_approach_error("initial point inside the singular exclusion zone", t0, u0, v0);

    record(tr, t0, y);
    if (cfg.method == IntegratorConfig::Method::RK4) {
        const long n = std::lround(std::ceil(std::abs(span) / cfg.h));
        if (n > cfg.max_steps) throw step_failure_error("integrate: step budget exceeded");
        const double h = span / static_cast<double>(n);
        double t = t0;
        for (long i = 0; i < n; ++i) {
            const detail::state prev = y;
            y = detail::rk4_step(f, t, y, h);
            t = t0 + static_cast<double>(i + 1) * span / static_cast<double>(n);
            check_guard(t, y, prev, t - h);
            record(tr, t, y);
        }
    } else {
        double t = t0;
        double h = std::copysign(cfg.h, span);
        int steps = 0;
        while ((span > 0) ? (t < t1 - 1e-15) : (t > t1 + 1e-15)) {
            if (++steps > cfg.max_steps) throw step_failure_error("integrate: step budget exceeded");
            if ((span > 0 && t + h > t1) || (span < 0 && t + h < t1)) h = t1 - t;
            double err = 0.0;
            detail::state cand = detail::ck_step(f, t, y, h, err);
            const double scale =
                cfg.abs_tol + cfg.rel_tol * std::max({std::abs(y.u), std::abs(y.v), 1.0});
            if (err > scale) {
                h *= std::max(0.2, 0.9 * std::pow(scale / err, 0.25));
                continue;
            }
            const detail::state prev = y;
            y = cand;
            const double tprev = t;
            t += h;
            check_guard(t, y, prev, tprev);
            record(tr, t, y);
            if (err > 0.0) h *= std::min(5.0, 0.9 * std::pow(scale / err, 0.2));
        }
    }
    // centered force-derivative estimates for Hermite interpolation of a(t)
    tr.adot_est.assign(tr.size(), 0.0);
    for (size_t i = 1; i + 1 < tr.size(); ++i)
        tr.adot_est[i] = (tr.a[i + 1] - tr.a[i - 1]) / (tr.t[i + 1] - tr.t[i - 1]);
    if (tr.size() >= 2) {
        tr.adot_est[0] = (tr.a[1] - tr.a[0]) / (tr.t[1] - tr.t[0]);
        tr.adot_est[tr.size() - 1] =
            (tr.a[tr.size() - 1] - tr.a[tr.size() - 2]) / (tr.t[tr.size() - 1] - tr.t[tr.size() - 2]);
    }
    return tr;
}

// max_i | dH/dt - dV/dt (u(t), t) | along the trajectory, dH/dt by centered
// differences on the stored samples.
inline double hamiltonian_drift(const Trajectory& tr, const PotentialSpec& spec) {
    double worst = 0.0;
    for (size_t i = 3; i + 3 < tr.size(); ++i) {
        const double h = tr.t[i + 1] - tr.t[i];
        const cplx dH = (45.0 * (tr.H[i + 1] - tr.H[i - 1]) - 9.0 * (tr.H[i + 2] - tr.H[i - 2]) +
                         (tr.H[i + 3] - tr.H[i - 3])) /
                        (60.0 * h);
        worst = std::max(worst, std::abs(dH - classical_dVdt(spec, tr.u[i], tr.t[i])));
    }
    return worst;
}

} // namespace painlab

#endif
