#pragma once

// Exterior calculus on chart fields: differential forms of degree 0..3,
// exterior derivative, wedge product, chart maps and pullback. The exterior
// derivative differentiates through the AD evaluators of the components, so
// d∘d vanishes to machine precision by construction.

#include <array>
#include <stdexcept>

#include "spindle/cplx.hpp"
#include "spindle/field.hpp"

namespace spindle {

constexpr int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return (int)r;
}

// sorted index combinations, lexicographic
template <int N, int K>
struct Combos {
    static constexpr int count = binom(N, K);
    std::array<std::array<int, K>, count> idx{};
    constexpr Combos() {
        std::array<int, K> c{};
        for (int i = 0; i < K; ++i) c[i] = i;
        for (int n = 0; n < count; ++n) {
            idx[n] = c;
            int i = K - 1;
            while (i >= 0 && c[i] == N - K + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < K; ++j) c[j] = c[j - 1] + 1;
        }
    }
    constexpr int rank(const std::array<int, K>& key) const {
        for (int n = 0; n < count; ++n)
            if (idx[n] == key) return n;
        return -1;
    }
};
template <int N, int K> inline constexpr Combos<N, K> combos{};

template <int K, int N>
struct Form {
    static constexpr int ncomp = binom(N, K);
    std::array<Scalar<N>, ncomp> comp{};

    Form() = default;

    const Scalar<N>& operator[](int i) const { return comp[i]; }
    Scalar<N>& operator[](int i) { return comp[i]; }

    // evaluate all components at a point
    template <class S>
    std::array<S, ncomp> operator()(const std::array<S, N>& p) const {
        std::array<S, ncomp> out;
        for (int i = 0; i < ncomp; ++i) out[i] = comp[i](p);
        return out;
    }
};

template <int K, int N> Form<K, N> operator+(const Form<K, N>& a, const Form<K, N>& b) {
    Form<K, N> r;
    for (int i = 0; i < Form<K, N>::ncomp; ++i) r[i] = a[i] + b[i];
    return r;
}
template <int K, int N> Form<K, N> operator-(const Form<K, N>& a, const Form<K, N>& b) {
    Form<K, N> r;
    for (int i = 0; i < Form<K, N>::ncomp; ++i) r[i] = a[i] - b[i];
    return r;
}
template <int K, int N> Form<K, N> operator-(const Form<K, N>& a) {
    Form<K, N> r;
    for (int i = 0; i < Form<K, N>::ncomp; ++i) r[i] = -a[i];
    return r;
}
template <int K, int N> Form<K, N> operator*(const Scalar<N>& s, const Form<K, N>& a) {
    Form<K, N> r;
    for (int i = 0; i < Form<K, N>::ncomp; ++i) r[i] = s * a[i];
    return r;
}
template <int K, int N> Form<K, N> operator*(double c, const Form<K, N>& a) {
    Form<K, N> r;
    for (int i = 0; i < Form<K, N>::ncomp; ++i) r[i] = c * a[i];
    return r;
}

// basis 1-form dx_i
template <int N> Form<1, N> coordinate_form(int i) {
    Form<1, N> r;
    for (int j = 0; j < N; ++j) r[j] = Scalar<N>::constant(j == i ? 1.0 : 0.0);
    return r;
}

// ---- exterior derivative ----------------------------------------------------

template <int N> Form<1, N> d(const Scalar<N>& f) {
    Form<1, N> r;
    for (int i = 0; i < N; ++i) r[i] = partial(f, i);
    return r;
}

template <int K, int N> Form<K + 1, N> d(const Form<K, N>& w) {
    static_assert(K + 1 <= N, "exterior derivative of a top-degree form");
    Form<K + 1, N> r;
    for (int n = 0; n < binom(N, K + 1); ++n) {
        const auto& I = combos<N, K + 1>.idx[n];
        Scalar<N> acc = Scalar<N>::constant(0.0);
        for (int j = 0; j <= K; ++j) {
            std::array<int, K> rest{};
            for (int t = 0, u = 0; t <= K; ++t)
                if (t != j) rest[u++] = I[t];
            const int m = combos<N, K>.rank(rest);
            Scalar<N> term = partial(w[m], I[j]);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        r[n] = acc;
    }
    return r;
}

// ---- wedge product ----------------------------------------------------------

namespace detail {
// sign of the permutation sorting the concatenation of two disjoint sorted
// index tuples; 0 if they intersect
template <int K, int L>
constexpr int merge_sign(const std::array<int, K>& a, const std::array<int, L>& b,
                         std::array<int, K + L>& merged) {
    std::array<int, K + L> cat{};
    for (int i = 0; i < K; ++i) cat[i] = a[i];
    for (int i = 0; i < L; ++i) cat[K + i] = b[i];
    int sign = 1;
    for (int i = 0; i < K + L; ++i)
        for (int j = i + 1; j < K + L; ++j) {
            if (cat[i] == cat[j]) return 0;
            if (cat[i] > cat[j]) sign = -sign;
        }
    merged = cat;
    for (int i = 0; i < K + L; ++i)
        for (int j = i + 1; j < K + L; ++j)
            if (merged[i] > merged[j]) std::swap(merged[i], merged[j]);
    return sign;
}
}  // namespace detail

template <int K, int L, int N>
Form<K + L, N> wedge(const Form<K, N>& a, const Form<L, N>& b) {
    static_assert(K + L <= N, "wedge degree overflow");
    Form<K + L, N> r;
    for (int n = 0; n < binom(N, K + L); ++n) r[n] = Scalar<N>::constant(0.0);
    for (int i = 0; i < binom(N, K); ++i) {
        for (int j = 0; j < binom(N, L); ++j) {
            std::array<int, K + L> merged{};
            const int s = detail::merge_sign<K, L>(combos<N, K>.idx[i], combos<N, L>.idx[j], merged);
            if (s == 0) continue;
            const int n = combos<N, K + L>.rank(merged);
            r[n] = (s > 0) ? r[n] + a[i] * b[j] : r[n] - a[i] * b[j];
        }
    }
    return r;
}

template <int L, int N> Form<L, N> wedge(const Scalar<N>& a, const Form<L, N>& b) { return a * b; }

// ---- chart maps and pullback -------------------------------------------------

template <int M> struct map_config;
template <> struct map_config<1> { static constexpr int maxl = 8; };
template <> struct map_config<2> { static constexpr int maxl = 5; };
template <> struct map_config<3> { static constexpr int maxl = 5; };
template <> struct map_config<5> { static constexpr int maxl = 2; };
template <> struct map_config<6> { static constexpr int maxl = 1; };

namespace detail {
template <int M, int N, int L0, class Seq> struct map_tuple_impl;
template <int M, int N, int L0, std::size_t... Is>
struct map_tuple_impl<M, N, L0, std::index_sequence<Is...>> {
    using type = std::tuple<std::function<std::array<scalar_t<M, L0 + (int)Is>, N>(
        const std::array<scalar_t<M, L0 + (int)Is>, M>&)>...>;
};
template <int M, int N, int L0, int L1>
using map_tuple = typename map_tuple_impl<M, N, L0, std::make_index_sequence<L1 - L0 + 1>>::type;
}  // namespace detail

// Smooth map between charts. Maps from the 3-chart also carry 2-variable
// evaluators so they can be composed with section maps from the 2-chart.
template <int M, int N>
class Map {
    using NativeTuple = detail::map_tuple<M, N, 0, map_config<M>::maxl>;
    using Tuple = std::conditional_t<
        M == 3,
        decltype(std::tuple_cat(std::declval<NativeTuple>(),
                                std::declval<detail::map_tuple<2, N, 1, map_config<2>::maxl>>())),
        NativeTuple>;
    std::shared_ptr<const Tuple> ev_;

    template <class S>
    static constexpr bool has_scalar() {
        constexpr int MM = jet_depth_v<S> == 0 ? M : jet_nvars_v<S>;
        constexpr int L = jet_depth_v<S>;
        using Fn = std::function<std::array<S, N>(const std::array<S, M>&)>;
        (void)MM;
        (void)L;
        return detail::tuple_contains<Fn, Tuple>::value;
    }

  public:
    Map() = default;
    template <class F, std::enable_if_t<!std::is_same_v<std::decay_t<F>, Map>, int> = 0>
    Map(F f) {
        auto t = std::make_shared<Tuple>();
        detail::fill_tuple(*t, f);
        ev_ = std::move(t);
    }

    template <class S>
    std::array<S, N> operator()(const std::array<S, M>& p) const {
        using Fn = std::function<std::array<S, N>(const std::array<S, M>&)>;
        static_assert(detail::tuple_contains<Fn, Tuple>::value, "map evaluated at unsupported jet type");
        return std::get<Fn>(*ev_)(p);
    }

    template <class S> static constexpr bool supports = has_scalar<S>();
};

template <int K, int M, int N>
Map<K, N> compose(const Map<M, N>& f, const Map<K, M>& g) {
    return Map<K, N>([f, g](const auto& p) { return f(g(p)); });
}

namespace detail {
template <class S, int R> S det_minor(const std::array<std::array<S, R>, R>& m) {
    if constexpr (R == 1) {
        return m[0][0];
    } else if constexpr (R == 2) {
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    } else {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
}
}  // namespace detail

// pullback of a stored form: (f*w)_I = sum_J w_J(f(x)) det(df_J/dx_I)
template <int K, int M, int N>
Form<K, M> pullback(const Map<M, N>& f, const Form<K, N>& w) {
    Form<K, M> r;
    for (int n = 0; n < binom(M, K); ++n) {
        const auto I = combos<M, K>.idx[n];
        r[n] = Scalar<M>([f, w, I]<class S>(const std::array<S, M>& p) -> S {
            constexpr int MM = jet_depth_v<S> == 0 ? M : jet_nvars_v<S>;
            if constexpr (Map<M, N>::template supports<Jet<S, MM>>) {
                std::array<Jet<S, MM>, M> q;
                for (int j = 0; j < M; ++j) {
                    q[j].a = p[j];
                    q[j].d[j] = S(1.0);
                }
                const auto fq = f(q);
                std::array<S, N> base;
                for (int j = 0; j < N; ++j) base[j] = fq[j].a;
                const auto wv = w(base);
                S acc = S(0.0);
                for (int m = 0; m < binom(N, K); ++m) {
                    const auto J = combos<N, K>.idx[m];
                    std::array<std::array<S, K>, K> mat;
                    for (int a = 0; a < K; ++a)
                        for (int b = 0; b < K; ++b) mat[a][b] = fq[J[a]].d[I[b]];
                    acc = acc + wv[m] * detail::det_minor<S, K>(mat);
                }
                return acc;
            } else {
                (void)p;
                throw std::logic_error("pullback: map lacks required jet depth");
            }
        });
    }
    return r;
}

// pullback of a closed-form functor 1-form on the target space; the functor
// must provide component(int j, const std::array<S,N>& y) for any scalar S
template <int M, int N, class FormF>
Form<1, M> pullback_fn(const Map<M, N>& f, FormF wf) {
    Form<1, M> r;
    for (int i = 0; i < M; ++i) {
        r[i] = Scalar<M>([f, wf, i]<class S>(const std::array<S, M>& p) -> S {
            constexpr int MM = jet_depth_v<S> == 0 ? M : jet_nvars_v<S>;
            if constexpr (Map<M, N>::template supports<Jet<S, MM>>) {
                std::array<Jet<S, MM>, M> q;
                for (int j = 0; j < M; ++j) {
                    q[j].a = p[j];
                    q[j].d[j] = S(1.0);
                }
                const auto fq = f(q);
                std::array<S, N> base;
                for (int j = 0; j < N; ++j) base[j] = fq[j].a;
                S acc = S(0.0);
                for (int j = 0; j < N; ++j) acc = acc + wf.component(j, base) * fq[j].d[i];
                return acc;
            } else {
                (void)p;
                throw std::logic_error("pullback_fn: map lacks required jet depth");
            }
        });
    }
    return r;
}

// ---- complex forms -----------------------------------------------------------

template <int N> struct CScalar {
    Scalar<N> re, im;
    template <class S> cplx<S> operator()(const std::array<S, N>& p) const { return {re(p), im(p)}; }
};

template <int N> CScalar<N> operator+(const CScalar<N>& a, const CScalar<N>& b) { return {a.re + b.re, a.im + b.im}; }
template <int N> CScalar<N> operator-(const CScalar<N>& a, const CScalar<N>& b) { return {a.re - b.re, a.im - b.im}; }
template <int N> CScalar<N> operator*(const CScalar<N>& a, const CScalar<N>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <int N> CScalar<N> conj(const CScalar<N>& a) { return {a.re, -a.im}; }

template <int K, int N> struct CForm {
    Form<K, N> re, im;
    template <class S>
    std::array<cplx<S>, Form<K, N>::ncomp> operator()(const std::array<S, N>& p) const {
        const auto pr = re(p);
        const auto pi = im(p);
        std::array<cplx<S>, Form<K, N>::ncomp> out;
        for (int i = 0; i < Form<K, N>::ncomp; ++i) out[i] = {pr[i], pi[i]};
        return out;
    }
};

template <int K, int N> CForm<K, N> operator+(const CForm<K, N>& a, const CForm<K, N>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <int K, int N> CForm<K, N> operator-(const CForm<K, N>& a, const CForm<K, N>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <int K, int N> CForm<K + 1, N> d(const CForm<K, N>& w) { return {d(w.re), d(w.im)}; }
template <int K, int L, int N> CForm<K + L, N> wedge(const CForm<K, N>& a, const CForm<L, N>& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}
template <int K, int N> CForm<K, N> operator*(const CScalar<N>& s, const CForm<K, N>& w) {
    return {s.re * w.re - s.im * w.im, s.re * w.im + s.im * w.re};
}
template <int K, int N> CForm<K, N> conj(const CForm<K, N>& w) { return {w.re, -w.im}; }
template <int K, int N> CForm<K, N> times_i(const CForm<K, N>& w) { return {-w.im, w.re}; }
template <int K, int N> CForm<K, N> re_part(const CForm<K, N>& w) { return {w.re, Form<K, N>{}}; }

// pullback of a closed-form complex 1-form functor
template <int M, int N, class CFormF>
CForm<1, M> cpullback_fn(const Map<M, N>& f, CFormF wf) {
    CForm<1, M> r;
    for (int i = 0; i < M; ++i) {
        auto make = [f, wf, i](bool imagpart) {
            return Scalar<M>([f, wf, i, imagpart]<class S>(const std::array<S, M>& p) -> S {
                constexpr int MM = jet_depth_v<S> == 0 ? M : jet_nvars_v<S>;
                if constexpr (Map<M, N>::template supports<Jet<S, MM>>) {
                    std::array<Jet<S, MM>, M> q;
                    for (int j = 0; j < M; ++j) {
                        q[j].a = p[j];
                        q[j].d[j] = S(1.0);
                    }
                    const auto fq = f(q);
                    std::array<S, N> base;
                    for (int j = 0; j < N; ++j) base[j] = fq[j].a;
                    cplx<S> acc(S(0.0));
                    for (int j = 0; j < N; ++j) acc = acc + wf.component(j, base) * fq[j].d[i];
                    return imagpart ? acc.im : acc.re;
                } else {
                    (void)p;
                    throw std::logic_error("cpullback_fn: map lacks required jet depth");
                }
            });
        };
        r.re[i] = make(false);
        r.im[i] = make(true);
    }
    return r;
}

// max |component| over a list of sample points
template <int K, int N>
double max_abs(const Form<K, N>& w, const std::vector<std::array<double, N>>& pts) {
    double m = 0.0;
    for (const auto& p : pts) {
        const auto v = w(p);
        for (const auto& x : v) m = std::max(m, std::fabs(x));
    }
    return m;
}
template <int K, int N>
double max_abs(const CForm<K, N>& w, const std::vector<std::array<double, N>>& pts) {
    return std::max(max_abs(w.re, pts), max_abs(w.im, pts));
}

}  // namespace spindle
