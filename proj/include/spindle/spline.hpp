#pragma once

// Natural cubic spline on a uniform grid. Used only to cache smooth radial
// coefficient functions (sampled exactly via AD) for ODE right-hand sides;
// interpolation error on the grids used is far below integration tolerances.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spindle {

class CubicSpline {
    double a_ = 0, h_ = 1;
    std::vector<double> y_, m_;  // values and second derivatives

  public:
    CubicSpline() = default;

    CubicSpline(double a, double b, std::vector<double> values) : a_(a), y_(std::move(values)) {
        const size_t n = y_.size();
        if (n < 4) throw std::invalid_argument("spline: need at least 4 nodes");
        h_ = (b - a) / (double)(n - 1);
        // tridiagonal solve for natural spline second derivatives
        m_.assign(n, 0.0);
        std::vector<double> u(n, 0.0), v(n, 0.0);
        for (size_t i = 1; i + 1 < n; ++i) {
            const double rhs = 6.0 * (y_[i + 1] - 2 * y_[i] + y_[i - 1]) / (h_ * h_);
            const double piv = 4.0 - u[i - 1];
            u[i] = 1.0 / piv;
            v[i] = (rhs - v[i - 1]) / piv;
        }
        for (size_t i = n - 2; i >= 1; --i) {
            m_[i] = v[i] - u[i] * m_[i + 1];
            if (i == 1) break;
        }
    }

    double operator()(double x) const {
        const size_t n = y_.size();
        double t = (x - a_) / h_;
        long i = (long)std::floor(t);
        if (i < 0) i = 0;
        if (i > (long)n - 2) i = (long)n - 2;
        const double dx = x - (a_ + i * h_);
        const double dx1 = h_ - dx;
        return (m_[i] * dx1 * dx1 * dx1 + m_[i + 1] * dx * dx * dx) / (6.0 * h_) +
               (y_[i] / h_ - m_[i] * h_ / 6.0) * dx1 + (y_[i + 1] / h_ - m_[i + 1] * h_ / 6.0) * dx;
    }
};

}  // namespace spindle
