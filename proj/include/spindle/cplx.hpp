#pragma once

// Complex numbers over an arbitrary differentiable scalar. std::complex is
// only specified for float/double, so chart computations involving z, w, mu
// at jet level use this little type instead.

#include <complex>

#include "spindle/jet.hpp"

namespace spindle {

template <class T>
struct cplx {
    T re{}, im{};

    cplx() = default;
    cplx(double r) : re(r), im(0.0) {}
    cplx(const T& r) : re(r), im(T(0.0)) {}
    cplx(const T& r, const T& i) : re(r), im(i) {}
    cplx(const std::complex<double>& z) : re(z.real()), im(z.imag()) {}
};

template <class T> cplx<T> operator+(const cplx<T>& x, const cplx<T>& y) { return {x.re + y.re, x.im + y.im}; }
template <class T> cplx<T> operator-(const cplx<T>& x, const cplx<T>& y) { return {x.re - y.re, x.im - y.im}; }
template <class T> cplx<T> operator-(const cplx<T>& x) { return {-x.re, -x.im}; }
template <class T> cplx<T> operator*(const cplx<T>& x, const cplx<T>& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
template <class T> cplx<T> operator*(const T& s, const cplx<T>& x) { return {s * x.re, s * x.im}; }
template <class T> cplx<T> operator*(const cplx<T>& x, const T& s) { return {x.re * s, x.im * s}; }
template <class T> cplx<T> operator*(double s, const cplx<T>& x) { return {s * x.re, s * x.im}; }
template <class T> cplx<T> operator*(const cplx<T>& x, double s) { return {x.re * s, x.im * s}; }
template <class T> cplx<T> operator/(const cplx<T>& x, const T& s) { return {x.re / s, x.im / s}; }
template <class T> cplx<T> operator/(const cplx<T>& x, const cplx<T>& y) {
    const T n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}
template <class T> cplx<T> operator+(const cplx<T>& x, double c) { return {x.re + c, x.im}; }
template <class T> cplx<T> operator-(const cplx<T>& x, double c) { return {x.re - c, x.im}; }

template <class T> cplx<T> conj(const cplx<T>& x) { return {x.re, -x.im}; }
template <class T> T norm2(const cplx<T>& x) { return x.re * x.re + x.im * x.im; }
template <class T> T abs(const cplx<T>& x) { return sqrt(norm2(x)); }

// e^{i t} for a real scalar t
template <class T> cplx<T> unit_phase(const T& t) { return {cos(t), sin(t)}; }

// i * x
template <class T> cplx<T> times_i(const cplx<T>& x) { return {-x.im, x.re}; }

inline std::complex<double> to_std(const cplx<double>& z) { return {z.re, z.im}; }

}  // namespace spindle
