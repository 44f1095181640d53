#ifndef PAINLAB_MATRIX2_HPP
#define PAINLAB_MATRIX2_HPP

#include <cmath>
#include <complex>

#include "painlab/numdiff.hpp"

namespace painlab {

// 2x2 complex matrix, value type.
struct Matrix2 {
    cplx a, b, c, d; // [[a, b], [c, d]]

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Matrix2 zero() { return {0.0, 0.0, 0.0, 0.0}; }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }

    Matrix2 operator+(const Matrix2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Matrix2 operator-(const Matrix2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Matrix2 operator*(const Matrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Matrix2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }

    double frobenius() const {
        return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    }
};

inline Matrix2 operator*(cplx s, const Matrix2& m) { return m * s; }

inline Matrix2 commutator(const Matrix2& x, const Matrix2& y) { return x * y - y * x; }

// exp(M) for traceless M via M^2 = -det(M) I:
// exp(M) = cosh(mu) I + (sinh(mu)/mu) M with mu^2 = -det(M).
// The general case splits off the trace. sinh(mu)/mu is evaluated by
// series for small |mu|.
inline Matrix2 expm(const Matrix2& m) {
    const cplx tr = m.trace();
    const Matrix2 n{m.a - tr / 2.0, m.b, m.c, m.d - tr / 2.0};
    const cplx mu2 = -n.det();
    const cplx mu = std::sqrt(mu2);
    cplx ch, shm; // cosh(mu), sinh(mu)/mu
    if (std::abs(mu) < 1e-4) {
        ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0 + mu2 * mu2 * mu2 / 720.0;
        shm = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0 + mu2 * mu2 * mu2 / 5040.0;
    } else {
        ch = std::cosh(mu);
        shm = std::sinh(mu) / mu;
    }
    Matrix2 r = Matrix2{ch, 0.0, 0.0, ch} + shm * n;
    return std::exp(tr / 2.0) * r;
}

} // namespace painlab

#endif
