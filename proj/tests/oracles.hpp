#ifndef PAINLAB_TESTS_ORACLES_HPP
#define PAINLAB_TESTS_ORACLES_HPP

// Test-only oracles, kept independent of the implementation paths they
// check: plain summations written from the defining series, and cosine-form
// variants where they exist.

#include <complex>

namespace oracles {

using cplx = std::complex<double>;
inline constexpr double opi = 3.14159265358979323846;
inline const cplx oi{0.0, 1.0};

// theta3 via the cosine series 1 + 2 sum q^{k^2} cos(2 pi k z).
inline cplx theta3_cosine(cplx z, cplx tau, int n = 60) {
    const cplx q = std::exp(oi * opi * tau);
    cplx s = 1.0;
    for (int k = 1; k <= n; ++k)
        s += 2.0 * std::pow(q, k * k) * std::cos(2.0 * opi * double(k) * z);
    return s;
}

// theta1 via the sine series 2 sum (-1)^k q^{(k+1/2)^2} sin((2k+1) pi z).
inline cplx theta1_sine(cplx z, cplx tau, int n = 60) {
    const cplx q = std::exp(oi * opi * tau);
    cplx s = 0.0;
    double sign = 1.0;
    for (int k = 0; k <= n; ++k) {
        s += 2.0 * sign * std::pow(q, (k + 0.5) * (k + 0.5)) * std::sin((2.0 * k + 1.0) * opi * z);
        sign = -sign;
    }
    return s;
}

} // namespace oracles

#endif
