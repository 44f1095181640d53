#ifndef PAINLAB_NUMDIFF_HPP
#define PAINLAB_NUMDIFF_HPP

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace painlab {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline const cplx iu{0.0, 1.0};

// t = tau/(2*pi*i) and the heat coefficient kappa = 1/(2*pi*i).
inline cplx tau_from_t(cplx t) { return 2.0 * pi * iu * t; }
inline cplx t_from_tau(cplx tau) { return tau / (2.0 * pi * iu); }
inline const cplx kappa = 1.0 / (2.0 * pi * iu);

// Central difference f'(x0) for complex-valued f along a real step in a
// (possibly complex) parameter.
template <typename F>
cplx central_diff(F&& f, cplx x0, double h) {
    return (f(x0 + h) - f(x0 - h)) / (2.0 * h);
}

// Richardson-extrapolated central difference. levels = 0 reduces to the
// plain O(h^2) stencil; each level halves the step and cancels the next
// even error term, so the truncation error is O(h^(2*(levels+1))).
template <typename F>
cplx richardson_diff(F&& f, cplx x0, double h, int levels = 1) {
    std::vector<cplx> row(static_cast<size_t>(levels) + 1);
    for (int i = 0; i <= levels; ++i)
        row[static_cast<size_t>(i)] = central_diff(f, x0, h / std::pow(2.0, i));
    double fac = 1.0;
    for (int j = 1; j <= levels; ++j) {
        fac *= 4.0;
        for (int i = levels; i >= j; --i)
            row[static_cast<size_t>(i)] =
                (fac * row[static_cast<size_t>(i)] - row[static_cast<size_t>(i - 1)]) / (fac - 1.0);
    }
    return row[static_cast<size_t>(levels)];
}

// Second/third/fourth derivatives by central stencils with one Richardson step.
template <typename F>
cplx central_diff2(F&& f, cplx x0, double h) {
    return (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h);
}

template <typename F>
cplx richardson_diff2(F&& f, cplx x0, double h) {
    cplx a = central_diff2(f, x0, h), b = central_diff2(f, x0, h / 2.0);
    return (4.0 * b - a) / 3.0;
}

template <typename F>
cplx central_diff3(F&& f, cplx x0, double h) {
    return (f(x0 + 2.0 * h) - 2.0 * f(x0 + h) + 2.0 * f(x0 - h) - f(x0 - 2.0 * h)) / (2.0 * h * h * h);
}

template <typename F>
cplx richardson_diff3(F&& f, cplx x0, double h) {
    cplx a = central_diff3(f, x0, h), b = central_diff3(f, x0, h / 2.0);
    return (4.0 * b - a) / 3.0;
}

template <typename F>
cplx central_diff4(F&& f, cplx x0, double h) {
    return (f(x0 + 2.0 * h) - 4.0 * f(x0 + h) + 6.0 * f(x0) - 4.0 * f(x0 - h) + f(x0 - 2.0 * h)) /
           (h * h * h * h);
}

template <typename F>
cplx richardson_diff4(F&& f, cplx x0, double h) {
    cplx a = central_diff4(f, x0, h), b = central_diff4(f, x0, h / 2.0);
    return (4.0 * b - a) / 3.0;
}

// Derivatives of log f up to order 4 from f and its plain derivatives.
// d1 = f'/f, d2 = (log f)'' etc. (Faa di Bruno, small orders.)
struct log_derivs {
    cplx d1, d2, d3, d4;
};

inline log_derivs log_derivatives(cplx f, cplx f1, cplx f2, cplx f3, cplx f4) {
    log_derivs r;
    const cplx g1 = f1 / f, g2 = f2 / f, g3 = f3 / f, g4 = f4 / f;
    r.d1 = g1;
    r.d2 = g2 - g1 * g1;
    r.d3 = g3 - 3.0 * g2 * g1 + 2.0 * g1 * g1 * g1;
    r.d4 = g4 - 4.0 * g3 * g1 - 3.0 * g2 * g2 + 12.0 * g2 * g1 * g1 - 6.0 * g1 * g1 * g1 * g1;
    return r;
}

inline double frob(const cplx& z) { return std::abs(z); }

} // namespace painlab

#endif
