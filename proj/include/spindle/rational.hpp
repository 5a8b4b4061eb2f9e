#pragma once

// Exact rational arithmetic on 64-bit integers, plus continued-fraction
// rational fitting. Closed-geodesic lengths are held as exact rational
// multiples of pi.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace spindle {

struct Rational {
    std::int64_t num = 0, den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    double value() const { return (double)num / (double)den; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

inline Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
}
inline Rational operator*(const Rational& a, const Rational& b) { return {a.num * b.num, a.den * b.den}; }
inline Rational operator/(const Rational& a, const Rational& b) { return {a.num * b.den, a.den * b.num}; }

// best rational approximation p/q of x with q <= max_den (continued fractions)
inline Rational rational_fit(double x, std::int64_t max_den = 1000) {
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        const double fl = std::floor(v);
        const std::int64_t a = (std::int64_t)fl;
        if (q0 + (q1 == 0 ? 0 : a * q1) < 0) break;
        const std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = v - fl;
        if (rem < 1e-14) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return Rational((std::int64_t)std::llround(x));
    return Rational(p1, q1);
}

}  // namespace spindle
