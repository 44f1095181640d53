#ifndef PAINLAB_RATIONAL_HPP
#define PAINLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace painlab {

// Exact rational arithmetic on 64-bit words with 128-bit intermediates.
// Magnitudes in the classification systems stay tiny; overflow throws.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::overflow_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static long long narrow(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational: overflow");
        return static_cast<long long>(v);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        const __int128 d = static_cast<__int128>(a.den) * b.den;
        return reduced(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num, b.den); }
    Rational operator-() const { return Rational(-num, den); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return reduced(static_cast<__int128>(a.num) * b.num, static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw std::overflow_error("rational: division by zero");
        return reduced(static_cast<__int128>(a.num) * b.den, static_cast<__int128>(a.den) * b.num);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

private:
    static Rational reduced(__int128 n, __int128 d) {
        if (d == 0) throw std::overflow_error("rational: zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 t = a % b;
            a = b;
            b = t;
        }
        return a < 0 ? -a : a;
    }
};

} // namespace painlab

#endif
