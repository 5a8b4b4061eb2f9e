#pragma once

// Chart fields with pervasive forward-mode AD.
//
// A Scalar<N> is a smooth real-valued function on an N-dimensional chart,
// stored as a bundle of type-erased evaluators, one per supported jet level.
// Differential operators (partial, exterior derivative, pullback) work by
// evaluating the operand one jet level higher, so every derivative taken
// anywhere in the library is exact.
//
// Fields on the 2-chart can additionally be evaluated at 3-variable jets;
// that is what makes pullbacks along the unit-tangent projection
// (r,phi,psi) -> (r,phi) possible on stored fields.
//
// Rotationally symmetric quantities form deep composition chains (curvature
// of a gauged metric needs four derivative levels of the underlying data).
// Scalar<1> radial fields evaluate those chains in cheap one-variable jets;
// embed_radial() lifts the result into any foreign jet type through exact
// Taylor composition, which keeps the deep chains out of the expensive
// multi-variable jet arithmetic.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spindle/jet.hpp"

namespace spindle {

template <int M, int L, int Arity>
using eval_fn = std::function<scalar_t<M, L>(const std::array<scalar_t<M, L>, Arity>&)>;

namespace detail {

template <int N, int M, int L0, class Seq>
struct family_tuple_impl;
template <int N, int M, int L0, std::size_t... Is>
struct family_tuple_impl<N, M, L0, std::index_sequence<Is...>> {
    using type = std::tuple<eval_fn<M, L0 + (int)Is, N>...>;
};
// evaluator functions for arity-N fields at M-variable jets, levels L0..L1
template <int N, int M, int L0, int L1>
using family_tuple = typename family_tuple_impl<N, M, L0, std::make_index_sequence<L1 - L0 + 1>>::type;

template <class T, class Tup> struct tuple_contains;
template <class T, class... Us> struct tuple_contains<T, std::tuple<Us...>> {
    static constexpr bool value = (std::is_same_v<T, Us> || ...);
};

template <class F, class Tup> void fill_tuple(Tup& t, const F& f) {
    std::apply([&](auto&... e) { ((e = f), ...); }, t);
}

}  // namespace detail

// Supported evaluator families per chart dimension. Level 0 of a foreign
// family coincides with level 0 of the native one, so it is stored once.
template <int N> struct field_config;
template <> struct field_config<1> {
    static constexpr int native_maxl = 8;
    using tuple = detail::family_tuple<1, 1, 0, 8>;
};
template <> struct field_config<2> {
    static constexpr int native_maxl = 6;
    using tuple = decltype(std::tuple_cat(std::declval<detail::family_tuple<2, 2, 0, 6>>(),
                                          std::declval<detail::family_tuple<2, 3, 1, 4>>()));
};
template <> struct field_config<3> {
    static constexpr int native_maxl = 5;
    using tuple = detail::family_tuple<3, 3, 0, 5>;
};
template <> struct field_config<5> {
    static constexpr int native_maxl = 2;
    using tuple = detail::family_tuple<5, 5, 0, 2>;
};

template <int N, int M, int L>
inline constexpr bool field_has_level =
    detail::tuple_contains<eval_fn<M, L, N>, typename field_config<N>::tuple>::value;

template <int N>
class Scalar {
    using Tuple = typename field_config<N>::tuple;
    std::shared_ptr<const Tuple> ev_;

  public:
    Scalar() = default;

    template <class F, std::enable_if_t<!std::is_same_v<std::decay_t<F>, Scalar>, int> = 0>
    Scalar(F f) {
        auto t = std::make_shared<Tuple>();
        detail::fill_tuple(*t, f);
        ev_ = std::move(t);
    }

    static Scalar constant(double c) {
        return Scalar([c](const auto& p) { return std::decay_t<decltype(p[0])>(c); });
    }
    static Scalar coordinate(int i) {
        return Scalar([i](const auto& p) { return p[i]; });
    }

    bool valid() const { return static_cast<bool>(ev_); }

    template <class S>
    S operator()(const std::array<S, N>& p) const {
        constexpr int M = jet_depth_v<S> == 0 ? N : jet_nvars_v<S>;
        constexpr int L = jet_depth_v<S>;
        static_assert(field_has_level<N, M, L>, "field evaluated at unsupported jet type");
        return std::get<eval_fn<M, L, N>>(*ev_)(p);
    }

    double at(const std::array<double, N>& p) const { return (*this)(p); }
};

// partial derivative in the i-th chart direction
template <int N>
Scalar<N> partial(const Scalar<N>& f, int i) {
    return Scalar<N>([f, i]<class S>(const std::array<S, N>& p) -> S {
        constexpr int M = jet_depth_v<S> == 0 ? N : jet_nvars_v<S>;
        constexpr int L = jet_depth_v<S>;
        if constexpr (field_has_level<N, M, L + 1>) {
            std::array<Jet<S, M>, N> q;
            for (int j = 0; j < N; ++j) {
                q[j].a = p[j];
                if (j < M) q[j].d[j] = S(1.0);
            }
            return f(q).d[i];
        } else {
            (void)p;
            throw std::logic_error("Scalar::partial: AD depth budget exceeded");
        }
    });
}

// ---- pointwise algebra ------------------------------------------------------

template <int N> Scalar<N> operator+(const Scalar<N>& a, const Scalar<N>& b) {
    return Scalar<N>([a, b](const auto& p) { return a(p) + b(p); });
}
template <int N> Scalar<N> operator-(const Scalar<N>& a, const Scalar<N>& b) {
    return Scalar<N>([a, b](const auto& p) { return a(p) - b(p); });
}
template <int N> Scalar<N> operator*(const Scalar<N>& a, const Scalar<N>& b) {
    return Scalar<N>([a, b](const auto& p) { return a(p) * b(p); });
}
template <int N> Scalar<N> operator/(const Scalar<N>& a, const Scalar<N>& b) {
    return Scalar<N>([a, b](const auto& p) { return a(p) / b(p); });
}
template <int N> Scalar<N> operator-(const Scalar<N>& a) {
    return Scalar<N>([a](const auto& p) { return -a(p); });
}
template <int N> Scalar<N> operator*(double c, const Scalar<N>& a) {
    return Scalar<N>([a, c](const auto& p) { return c * a(p); });
}
template <int N> Scalar<N> operator*(const Scalar<N>& a, double c) { return c * a; }
template <int N> Scalar<N> operator+(const Scalar<N>& a, double c) {
    return Scalar<N>([a, c](const auto& p) { return a(p) + c; });
}
template <int N> Scalar<N> operator-(const Scalar<N>& a, double c) { return a + (-c); }
template <int N> Scalar<N> operator-(double c, const Scalar<N>& a) { return -(a + (-c)); }
template <int N> Scalar<N> operator/(const Scalar<N>& a, double c) { return a * (1.0 / c); }

template <int N> Scalar<N> sqrt_f(const Scalar<N>& a) {
    return Scalar<N>([a](const auto& p) { using std::sqrt; using spindle::sqrt; return sqrt(a(p)); });
}
template <int N> Scalar<N> log_f(const Scalar<N>& a) {
    return Scalar<N>([a](const auto& p) { using std::log; using spindle::log; return log(a(p)); });
}
template <int N> Scalar<N> exp_f(const Scalar<N>& a) {
    return Scalar<N>([a](const auto& p) { using std::exp; using spindle::exp; return exp(a(p)); });
}

// ---- radial fields ----------------------------------------------------------

// f^(k)(r0) read off a pure 1-variable jet tower
inline double tower_deriv(double x, int k) { return k == 0 ? x : 0.0; }
template <class T> double tower_deriv(const Jet<T, 1>& x, int k) {
    return k == 0 ? jet_value(x.a) : tower_deriv(x.d[0], k - 1);
}

namespace detail {
template <int L> scalar_t<1, L> radial_seed(double r0) {
    if constexpr (L == 0) {
        return r0;
    } else {
        scalar_t<1, L> s;
        s.a = radial_seed<L - 1>(r0);
        s.d[0] = scalar_t<1, L - 1>(1.0);
        return s;
    }
}
}  // namespace detail

// A smooth function of one variable with cached Taylor data. Used for every
// rotationally symmetric quantity; embed_radial() lifts it into fields on
// higher-dimensional charts at negligible AD cost.
class RadialField {
    Scalar<1> f_;
    struct Cache {
        std::mutex mu;
        std::unordered_map<std::uint64_t, std::vector<double>> map;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

    template <int L> std::vector<double> compute(double r0) const {
        const auto out = f_(std::array<scalar_t<1, L>, 1>{detail::radial_seed<L>(r0)});
        std::vector<double> c(L + 1);
        double fact = 1.0;
        for (int k = 0; k <= L; ++k) {
            if (k > 1) fact *= k;
            c[k] = tower_deriv(out, k) / fact;
        }
        return c;
    }

  public:
    RadialField() = default;
    RadialField(Scalar<1> f) : f_(std::move(f)) {}
    template <class F, std::enable_if_t<!std::is_same_v<std::decay_t<F>, RadialField> &&
                                            !std::is_same_v<std::decay_t<F>, Scalar<1>>,
                                        int> = 0>
    RadialField(F f) : f_(Scalar<1>(std::move(f))) {}

    const Scalar<1>& field() const { return f_; }
    bool valid() const { return f_.valid(); }

    double operator()(double r) const { return f_(std::array<double, 1>{r}); }

    // Taylor coefficients f^(k)(r0)/k!, k = 0..order
    std::vector<double> taylor(double r0, int order) const {
        std::uint64_t key;
        std::memcpy(&key, &r0, sizeof key);
        {
            std::scoped_lock lk(cache_->mu);
            auto it = cache_->map.find(key);
            if (it != cache_->map.end() && (int)it->second.size() > order) {
                return {it->second.begin(), it->second.begin() + order + 1};
            }
        }
        std::vector<double> c;
        switch (order) {
            case 0: c = compute<0>(r0); break;
            case 1: c = compute<1>(r0); break;
            case 2: c = compute<2>(r0); break;
            case 3: c = compute<3>(r0); break;
            case 4: c = compute<4>(r0); break;
            case 5: c = compute<5>(r0); break;
            case 6: c = compute<6>(r0); break;
            case 7: c = compute<7>(r0); break;
            default: c = compute<8>(r0); break;
        }
        std::scoped_lock lk(cache_->mu);
        auto& slot = cache_->map[key];
        if (slot.size() < c.size()) slot = c;
        if (cache_->map.size() > 200000) cache_->map.clear();
        return c;
    }

    // evaluate at an arbitrary jet scalar via exact Taylor composition
    template <class S> S eval_at(const S& r) const {
        constexpr int L = jet_depth_v<S>;
        if constexpr (L == 0) {
            return (*this)(r);
        } else {
            const double r0 = jet_value(r);
            const auto c = taylor(r0, L);
            const S dr = r - r0;
            S acc = S(c[L]);
            for (int k = L - 1; k >= 0; --k) acc = acc * dr + S(c[k]);
            return acc;
        }
    }
};

inline RadialField radial_deriv(const RadialField& f) { return RadialField(partial(f.field(), 0)); }

// arithmetic wrappers keeping the cached representation
inline RadialField operator+(const RadialField& a, const RadialField& b) { return RadialField(a.field() + b.field()); }
inline RadialField operator-(const RadialField& a, const RadialField& b) { return RadialField(a.field() - b.field()); }
inline RadialField operator*(const RadialField& a, const RadialField& b) { return RadialField(a.field() * b.field()); }
inline RadialField operator/(const RadialField& a, const RadialField& b) { return RadialField(a.field() / b.field()); }
inline RadialField operator*(double c, const RadialField& a) { return RadialField(c * a.field()); }
inline RadialField operator+(const RadialField& a, double c) { return RadialField(a.field() + c); }
inline RadialField operator-(const RadialField& a, double c) { return RadialField(a.field() - c); }

// lift a radial field to a field on an N-chart, reading coordinate `coord`
template <int N>
Scalar<N> embed_radial(const RadialField& f, int coord = 0) {
    return Scalar<N>([f, coord](const auto& p) { return f.eval_at(p[coord]); });
}

}  // namespace spindle
