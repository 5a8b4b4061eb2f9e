#pragma once

// Adaptive Dormand-Prince 5(4) integrator with dense output and event
// detection. Events are localized on the quartic dense-output interpolant by
// bisection/Brent to a parameter tolerance of 1e-12.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spindle/roots.hpp"

namespace spindle {

struct OdeOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double max_step = M_PI / 100;
    double initial_step = 1e-3;
    double event_tol = 1e-12;
    long max_steps = 2000000;
};

using OdeState = std::vector<double>;

struct OdeEvent {
    double s;
    OdeState y;
    int index;  // which event function fired
};

// dense output segment for DOPRI5 (Shampine's quartic interpolant)
struct DenseSegment {
    double s0, h;
    OdeState y0, y1;
    std::vector<std::array<double, 5>> rcont;  // per component

    OdeState eval(double s) const {
        const double th = (s - s0) / h;
        const double th1 = 1.0 - th;
        OdeState y(y0.size());
        for (size_t i = 0; i < y.size(); ++i) {
            const auto& r = rcont[i];
            y[i] = r[0] + th * (r[1] + th1 * (r[2] + th * (r[3] + th1 * r[4])));
        }
        return y;
    }
};

class Dopri5 {
    std::function<void(double, const OdeState&, OdeState&)> f_;
    OdeOptions opt_;

  public:
    Dopri5(std::function<void(double, const OdeState&, OdeState&)> f, OdeOptions opt = {})
        : f_(std::move(f)), opt_(opt) {}

    // Integrate from (s0,y0) to s_end. step_cb (optional) sees each accepted
    // dense segment and may return false to stop integration early.
    void integrate(double s0, const OdeState& y0, double s_end,
                   const std::function<bool(const DenseSegment&)>& step_cb) const {
        static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
        static constexpr double a21 = 1.0 / 5;
        static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
        static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
        static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                                a54 = -212.0 / 729;
        static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                                a64 = 49.0 / 176, a65 = -5103.0 / 18656;
        static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                                b5 = -2187.0 / 6784, b6 = 11.0 / 84;
        static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                                e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
        static constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                                d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                                d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

        const size_t n = y0.size();
        OdeState y = y0, k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);
        double s = s0;
        double h = std::min(opt_.initial_step, opt_.max_step);
        const double dir = s_end >= s0 ? 1.0 : -1.0;
        h *= dir;
        f_(s, y, k1);
        long nsteps = 0;
        while (dir * (s_end - s) > 1e-15) {
            if (++nsteps > opt_.max_steps) throw std::runtime_error("ode: step limit exceeded");
            if (dir * (s + h - s_end) > 0) h = s_end - s;
            for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
            f_(s + c2 * h, yt, k2);
            for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
            f_(s + c3 * h, yt, k3);
            for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
            f_(s + c4 * h, yt, k4);
            for (size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
            f_(s + c5 * h, yt, k5);
            for (size_t i = 0; i < n; ++i)
                yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
            f_(s + h, yt, k6);
            for (size_t i = 0; i < n; ++i)
                ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
            f_(s + h, ynew, k7);

            double err = 0.0;
            for (size_t i = 0; i < n; ++i) {
                const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                                      e7 * k7[i]);
                const double sc = opt_.abs_tol +
                                  opt_.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
                err += (e / sc) * (e / sc);
            }
            err = std::sqrt(err / n);

            if (err <= 1.0) {
                DenseSegment seg;
                seg.s0 = s;
                seg.h = h;
                seg.y0 = y;
                seg.y1 = ynew;
                seg.rcont.resize(n);
                for (size_t i = 0; i < n; ++i) {
                    const double dy = ynew[i] - y[i];
                    const double bspl = h * k1[i] - dy;
                    seg.rcont[i][0] = y[i];
                    seg.rcont[i][1] = dy;
                    seg.rcont[i][2] = bspl;
                    seg.rcont[i][3] = dy - h * k7[i] - bspl;
                    seg.rcont[i][4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                           d6 * k6[i] + d7 * k7[i]);
                }
                s += h;
                y = ynew;
                k1 = k7;
                if (!step_cb(seg)) return;
            }
            const double fac = std::clamp(0.9 * std::pow(err > 0 ? err : 1e-10, -0.2), 0.2, 5.0);
            h *= fac;
            if (std::fabs(h) > opt_.max_step) h = dir * opt_.max_step;
            if (std::fabs(h) < 1e-14) throw std::runtime_error("ode: step size underflow");
        }
    }

    // Integrate while recording zero crossings of the event functions.
    // Stops after max_events events or at s_end. Returns events in order.
    std::vector<OdeEvent> events(double s0, const OdeState& y0, double s_end,
                                 const std::vector<std::function<double(double, const OdeState&)>>& evf,
                                 int max_events) const {
        std::vector<OdeEvent> out;
        std::vector<double> prev(evf.size());
        bool first = true;
        integrate(s0, y0, s_end, [&](const DenseSegment& seg) {
            if (first) {
                for (size_t i = 0; i < evf.size(); ++i) prev[i] = evf[i](seg.s0, seg.y0);
                first = false;
            }
            const double s1 = seg.s0 + seg.h;
            for (size_t i = 0; i < evf.size(); ++i) {
                const double v1 = evf[i](s1, seg.y1);
                if (prev[i] != 0 && v1 != 0 && prev[i] * v1 < 0) {
                    auto g = [&](double s) { return evf[i](s, seg.eval(s)); };
                    const double se = brent(g, seg.s0, s1, opt_.event_tol);
                    out.push_back({se, seg.eval(se), (int)i});
                    if ((int)out.size() >= max_events) return false;
                }
                prev[i] = v1;
            }
            return true;
        });
        return out;
    }
};

}  // namespace spindle
