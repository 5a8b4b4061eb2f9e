#pragma once

// Bracketed scalar root finding (Brent's method) and small helpers.

#include <cmath>
#include <functional>
#include <stdexcept>

namespace spindle {

// Brent root finder on a bracketing interval [a,b] with f(a)*f(b) <= 0.
template <class F>
double brent(F&& f, double a, double b, double tol = 1e-13, int maxit = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if (fa * fb > 0) throw std::invalid_argument("brent: root not bracketed");
    if (std::fabs(fa) < std::fabs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa, s = b, d = b - a;
    bool mflag = true;
    for (int it = 0; it < maxit; ++it) {
        if (fb == 0 || std::fabs(b - a) < tol) return b;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) + b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }
        const double lo = (3 * a + b) / 4;
        const bool cond = !((s > lo && s < b) || (s < lo && s > b)) ||
                          (mflag && std::fabs(s - b) >= std::fabs(b - c) / 2) ||
                          (!mflag && std::fabs(s - b) >= std::fabs(c - d) / 2) ||
                          (mflag && std::fabs(b - c) < tol) || (!mflag && std::fabs(c - d) < tol);
        if (cond) {
            s = (a + b) / 2;
            mflag = true;
        } else {
            mflag = false;
        }
        const double fs = f(s);
        d = c;
        c = b;
        fc = fb;
        if (fa * fs < 0) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::fabs(fa) < std::fabs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

// Scan [a,b] on a grid for a sign change of f, then polish with Brent.
// Returns NaN when no sign change is found.
template <class F>
double bracketed_root_scan(F&& f, double a, double b, int ngrid = 256, double tol = 1e-13) {
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= ngrid; ++i) {
        const double x1 = a + (b - a) * i / ngrid;
        const double f1 = f(x1);
        if (f0 == 0) return x0;
        if (f0 * f1 <= 0) return brent(f, x0, x1, tol);
        x0 = x1;
        f0 = f1;
    }
    return std::nan("");
}

}  // namespace spindle
