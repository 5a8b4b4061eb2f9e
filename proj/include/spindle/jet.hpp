#pragma once

// Forward-mode automatic differentiation via nestable jets.
//
// Jet<T,N> carries a value and its N first partial derivatives; nesting
// Jet<Jet<double,N>,N> yields exact second partials and so on. All field
// evaluations in this library are lifted through these types, so exterior
// derivatives and curvatures are exact to machine precision rather than
// finite-difference approximations.

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace spindle {

template <class T, int N>
struct Jet {
    T a{};                  // value
    std::array<T, N> d{};   // partial derivatives

    constexpr Jet() = default;
    constexpr Jet(double v) : a(v) {}  // implicit: constants lift with zero derivative
    template <class U, std::enable_if_t<std::is_constructible_v<T, U> && !std::is_same_v<U, double>, int> = 0>
    constexpr explicit Jet(const U& v) : a(v) {}
    constexpr Jet(const T& value, const std::array<T, N>& deriv) : a(value), d(deriv) {}

    static constexpr int nvars = N;
    using value_type = T;
};

// ---- traits ---------------------------------------------------------------

template <class S> struct jet_traits {
    static constexpr int depth = 0;
    static constexpr int nvars = 0;
};
template <class T, int N> struct jet_traits<Jet<T, N>> {
    static constexpr int depth = 1 + jet_traits<T>::depth;
    static constexpr int nvars = N;
};
template <class S> inline constexpr int jet_depth_v = jet_traits<S>::depth;
template <class S> inline constexpr int jet_nvars_v = jet_traits<S>::nvars;

inline double jet_value(double x) { return x; }
template <class T, int N> double jet_value(const Jet<T, N>& x) { return jet_value(x.a); }

// scalar type of an N-chart at nesting level L
template <int N, int L> struct scalar_type { using type = Jet<typename scalar_type<N, L - 1>::type, N>; };
template <int N> struct scalar_type<N, 0> { using type = double; };
template <int N, int L> using scalar_t = typename scalar_type<N, L>::type;

// ---- arithmetic -----------------------------------------------------------

template <class T, int N> Jet<T, N> operator-(const Jet<T, N>& x) {
    Jet<T, N> r;
    r.a = -x.a;
    for (int i = 0; i < N; ++i) r.d[i] = -x.d[i];
    return r;
}

template <class T, int N> Jet<T, N> operator+(const Jet<T, N>& x, const Jet<T, N>& y) {
    Jet<T, N> r;
    r.a = x.a + y.a;
    for (int i = 0; i < N; ++i) r.d[i] = x.d[i] + y.d[i];
    return r;
}
template <class T, int N> Jet<T, N> operator-(const Jet<T, N>& x, const Jet<T, N>& y) {
    Jet<T, N> r;
    r.a = x.a - y.a;
    for (int i = 0; i < N; ++i) r.d[i] = x.d[i] - y.d[i];
    return r;
}
template <class T, int N> Jet<T, N> operator*(const Jet<T, N>& x, const Jet<T, N>& y) {
    Jet<T, N> r;
    r.a = x.a * y.a;
    for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * y.a + x.a * y.d[i];
    return r;
}
template <class T, int N> Jet<T, N> operator/(const Jet<T, N>& x, const Jet<T, N>& y) {
    Jet<T, N> r;
    r.a = x.a / y.a;
    const T inv2 = T(1.0) / (y.a * y.a);
    for (int i = 0; i < N; ++i) r.d[i] = (x.d[i] * y.a - x.a * y.d[i]) * inv2;
    return r;
}

template <class T, int N> Jet<T, N> operator+(const Jet<T, N>& x, double c) {
    Jet<T, N> r = x;
    r.a = x.a + c;
    return r;
}
template <class T, int N> Jet<T, N> operator+(double c, const Jet<T, N>& x) { return x + c; }
template <class T, int N> Jet<T, N> operator-(const Jet<T, N>& x, double c) { return x + (-c); }
template <class T, int N> Jet<T, N> operator-(double c, const Jet<T, N>& x) { return -(x + (-c)); }
template <class T, int N> Jet<T, N> operator*(const Jet<T, N>& x, double c) {
    Jet<T, N> r;
    r.a = x.a * c;
    for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * c;
    return r;
}
template <class T, int N> Jet<T, N> operator*(double c, const Jet<T, N>& x) { return x * c; }
template <class T, int N> Jet<T, N> operator/(const Jet<T, N>& x, double c) { return x * (1.0 / c); }
template <class T, int N> Jet<T, N> operator/(double c, const Jet<T, N>& x) { return Jet<T, N>(c) / x; }

template <class T, int N> bool operator<(const Jet<T, N>& x, const Jet<T, N>& y) { return jet_value(x) < jet_value(y); }
template <class T, int N> bool operator<(const Jet<T, N>& x, double y) { return jet_value(x) < y; }
template <class T, int N> bool operator>(const Jet<T, N>& x, double y) { return jet_value(x) > y; }

// ---- chain-rule helper ----------------------------------------------------

// f(x) with given value and derivative factor: r = f(x.a), r' = df * x'
template <class T, int N> Jet<T, N> jet_chain(const Jet<T, N>& x, const T& f, const T& df) {
    Jet<T, N> r;
    r.a = f;
    for (int i = 0; i < N; ++i) r.d[i] = df * x.d[i];
    return r;
}

// ---- elementary functions -------------------------------------------------

using std::atan2;
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;
using std::tan;
using std::asin;
using std::acos;
using std::atan;
using std::cosh;
using std::sinh;
using std::fabs;

template <class T, int N> Jet<T, N> sin(const Jet<T, N>& x) { return jet_chain(x, sin(x.a), cos(x.a)); }
template <class T, int N> Jet<T, N> cos(const Jet<T, N>& x) { return jet_chain(x, cos(x.a), -sin(x.a)); }
template <class T, int N> Jet<T, N> tan(const Jet<T, N>& x) {
    const T t = tan(x.a);
    return jet_chain(x, t, T(1.0) + t * t);
}
template <class T, int N> Jet<T, N> exp(const Jet<T, N>& x) {
    const T e = exp(x.a);
    return jet_chain(x, e, e);
}
template <class T, int N> Jet<T, N> log(const Jet<T, N>& x) { return jet_chain(x, log(x.a), T(1.0) / x.a); }
template <class T, int N> Jet<T, N> sqrt(const Jet<T, N>& x) {
    const T s = sqrt(x.a);
    return jet_chain(x, s, T(0.5) / s);
}
template <class T, int N> Jet<T, N> asin(const Jet<T, N>& x) {
    return jet_chain(x, asin(x.a), T(1.0) / sqrt(T(1.0) - x.a * x.a));
}
template <class T, int N> Jet<T, N> acos(const Jet<T, N>& x) {
    return jet_chain(x, acos(x.a), T(-1.0) / sqrt(T(1.0) - x.a * x.a));
}
template <class T, int N> Jet<T, N> atan(const Jet<T, N>& x) {
    return jet_chain(x, atan(x.a), T(1.0) / (T(1.0) + x.a * x.a));
}
template <class T, int N> Jet<T, N> atan2(const Jet<T, N>& y, const Jet<T, N>& x) {
    Jet<T, N> r;
    r.a = atan2(y.a, x.a);
    const T inv = T(1.0) / (x.a * x.a + y.a * y.a);
    for (int i = 0; i < N; ++i) r.d[i] = (x.a * y.d[i] - y.a * x.d[i]) * inv;
    return r;
}
template <class T, int N> Jet<T, N> fabs(const Jet<T, N>& x) { return jet_value(x) < 0 ? -x : x; }

template <class T, int N> Jet<T, N> pow(const Jet<T, N>& x, int n) {
    if (n == 0) return Jet<T, N>(1.0);
    if (n < 0) return 1.0 / pow(x, -n);
    Jet<T, N> r = x;
    for (int k = 1; k < n; ++k) r = r * x;
    return r;
}

// ---- seeding --------------------------------------------------------------

// lift a point one jet level, seeding unit derivatives in each slot
template <class S, int N>
std::array<Jet<S, N>, N> jet_lift(const std::array<S, N>& p) {
    std::array<Jet<S, N>, N> q;
    for (int i = 0; i < N; ++i) {
        q[i].a = p[i];
        for (int j = 0; j < N; ++j) q[i].d[j] = S(i == j ? 1.0 : 0.0);
    }
    return q;
}

}  // namespace spindle
