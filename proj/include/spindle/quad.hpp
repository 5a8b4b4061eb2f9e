#pragma once

// Quadrature: composite Gauss-Legendre for smooth integrands on intervals,
// trapezoid rule for periodic integrands (spectrally accurate there).

#include <array>
#include <cmath>
#include <functional>

namespace spindle {

namespace detail {
// 16-point Gauss-Legendre nodes/weights on [-1,1]
inline constexpr std::array<double, 8> gl_x = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
inline constexpr std::array<double, 8> gl_w = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};
}  // namespace detail

template <class F>
double gauss16(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 8; ++i) {
        s += detail::gl_w[i] * (f(mid + half * detail::gl_x[i]) + f(mid - half * detail::gl_x[i]));
    }
    return s * half;
}

template <class F>
double integrate(F&& f, double a, double b, int panels = 16) {
    double s = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double x0 = a + (b - a) * i / panels;
        const double x1 = a + (b - a) * (i + 1) / panels;
        s += gauss16(f, x0, x1);
    }
    return s;
}

// integral of a period-P periodic function over one period
template <class F>
double integrate_periodic(F&& f, double period, int n = 512) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += f(period * i / n);
    return s * period / n;
}

}  // namespace spindle
