#pragma once

// Riemannian data on 2-charts: metric fields, orthonormal coframe and
// connection form, Hodge star, codifferential, Gauss curvature and
// Levi-Civita / affine connections.
//
// Conventions (fixed once, validated by the conformal identities):
//   * star on 1-forms is rotation by +pi/2: star e1 = e2, star e2 = -e1
//   * delta = -star d star on 1-forms
//   * K = -(d sigma)_{xy} / sqrt(det g) with sigma the connection form of
//     the orthonormal coframe e1 = a dx + b dy, e2 = c dy

#include <stdexcept>

#include "spindle/forms.hpp"

namespace spindle {

struct MetricField {
    // components g11, g12, g22 on the 2-chart
    Scalar<2> g11, g12, g22;

    template <class S>
    std::array<S, 3> operator()(const std::array<S, 2>& p) const {
        return {g11(p), g12(p), g22(p)};
    }

    Scalar<2> det() const { return g11 * g22 - g12 * g12; }

    static MetricField euclidean() {
        return {Scalar<2>::constant(1.0), Scalar<2>::constant(0.0), Scalar<2>::constant(1.0)};
    }
    static MetricField diagonal(Scalar<2> grr, Scalar<2> gpp) {
        return {std::move(grr), Scalar<2>::constant(0.0), std::move(gpp)};
    }
};

inline MetricField conformal_scale(const MetricField& g, const Scalar<2>& u) {
    const Scalar<2> s = exp_f(2.0 * u);
    return {s * g.g11, s * g.g12, s * g.g22};
}

// orthonormal coframe e1 = a dx + b dy, e2 = c dy (Cholesky of g)
struct OrthoCoframe {
    Scalar<2> a, b, c;
};

inline OrthoCoframe orthonormal_coframe(const MetricField& g) {
    OrthoCoframe f;
    f.a = sqrt_f(g.g11);
    f.b = g.g12 / f.a;
    f.c = sqrt_f(g.det() / g.g11);
    return f;
}

// Levi-Civita connection form sigma of the orthonormal coframe:
// de1 = sigma ^ e2, de2 = -sigma ^ e1
inline Form<1, 2> connection_form(const MetricField& g) {
    const auto f = orthonormal_coframe(g);
    const Scalar<2> sr = (partial(f.b, 0) - partial(f.a, 1)) / f.c;
    const Scalar<2> sp = (partial(f.c, 0) + sr * f.b) / f.a;
    Form<1, 2> sigma;
    sigma[0] = sr;
    sigma[1] = sp;
    return sigma;
}

inline Form<2, 2> volume_form(const MetricField& g) {
    Form<2, 2> v;
    v[0] = sqrt_f(g.det());
    return v;
}

// Hodge star with respect to g; orientation = +-1 flips the rotation sense.
inline Form<1, 2> hodge_star(const MetricField& g, const Form<1, 2>& w, int orientation = 1) {
    // decompose w = p e1 + q e2, return -q e1 + p e2
    const auto f = orthonormal_coframe(g);
    const Scalar<2> p = w[0] / f.a;
    const Scalar<2> q = (w[1] - p * f.b) / f.c;
    const double o = orientation >= 0 ? 1.0 : -1.0;
    Form<1, 2> r;
    r[0] = o * (-q * f.a);
    r[1] = o * (p * f.c - q * f.b);
    return r;
}

inline Form<2, 2> hodge_star(const MetricField& g, const Scalar<2>& f0, int orientation = 1) {
    Form<2, 2> r;
    r[0] = (orientation >= 0 ? 1.0 : -1.0) * f0 * sqrt_f(g.det());
    return r;
}

inline Scalar<2> hodge_star(const MetricField& g, const Form<2, 2>& w, int orientation = 1) {
    return (orientation >= 0 ? 1.0 : -1.0) * w[0] / sqrt_f(g.det());
}

// codifferential on 1-forms: delta = -star d star
inline Scalar<2> codifferential(const MetricField& g, const Form<1, 2>& w, int orientation = 1) {
    return -hodge_star(g, d(hodge_star(g, w, orientation)), orientation);
}

// Gauss curvature from the connection form
inline Scalar<2> gauss_curvature(const MetricField& g) {
    const auto sigma = connection_form(g);
    const auto dsigma = d(sigma);
    return -dsigma[0] / sqrt_f(g.det());
}

// laplacian on functions, Delta u = -delta d u (negative Laplace-de Rham)
inline Scalar<2> laplacian(const MetricField& g, const Scalar<2>& u) {
    return -codifferential(g, d(u));
}

// ---- affine connections ------------------------------------------------------

// Christoffel symbols Gamma^k_ij, symmetric storage (ij) in {(00),(01),(11)}
struct AffineConnection {
    std::array<std::array<Scalar<2>, 3>, 2> gamma;

    static int sym_index(int i, int j) { return i + j; }  // 00->0, 01/10->1, 11->2

    const Scalar<2>& operator()(int k, int i, int j) const { return gamma[k][sym_index(i, j)]; }

    template <class S>
    std::array<std::array<S, 3>, 2> eval(const std::array<S, 2>& p) const {
        std::array<std::array<S, 3>, 2> out;
        for (int k = 0; k < 2; ++k)
            for (int m = 0; m < 3; ++m) out[k][m] = gamma[k][m](p);
        return out;
    }
};

// Levi-Civita Christoffels of g, via one AD level on the metric components
inline AffineConnection levi_civita(const MetricField& g) {
    AffineConnection c;
    for (int k = 0; k < 2; ++k) {
        for (int i = 0; i < 2; ++i) {
            for (int j = i; j < 2; ++j) {
                c.gamma[k][AffineConnection::sym_index(i, j)] =
                    Scalar<2>([g, k, i, j]<class S>(const std::array<S, 2>& p) -> S {
                        constexpr int MM = jet_depth_v<S> == 0 ? 2 : jet_nvars_v<S>;
                        if constexpr (field_has_level<2, MM, jet_depth_v<S> + 1>) {
                            std::array<Jet<S, MM>, 2> q;
                            for (int t = 0; t < 2; ++t) {
                                q[t].a = p[t];
                                q[t].d[t] = S(1.0);
                            }
                            const auto gj = g(q);  // g11, g12, g22 with first partials
                            auto comp = [&](int a, int b) { return gj[a + b]; };
                            auto dcomp = [&](int l, int a, int b) { return gj[a + b].d[l]; };
                            // inverse metric at base level
                            const S det = comp(0, 0).a * comp(1, 1).a - comp(0, 1).a * comp(0, 1).a;
                            std::array<std::array<S, 2>, 2> ginv;
                            ginv[0][0] = comp(1, 1).a / det;
                            ginv[1][1] = comp(0, 0).a / det;
                            ginv[0][1] = ginv[1][0] = -comp(0, 1).a / det;
                            S acc = S(0.0);
                            for (int l = 0; l < 2; ++l)
                                acc = acc + ginv[k][l] * (dcomp(i, j, l) + dcomp(j, i, l) - dcomp(l, i, j));
                            return 0.5 * acc;
                        } else {
                            (void)p;
                            throw std::logic_error("levi_civita: AD depth budget exceeded");
                        }
                    });
            }
        }
    }
    return c;
}

inline AffineConnection add(const AffineConnection& a, const AffineConnection& b) {
    AffineConnection c;
    for (int k = 0; k < 2; ++k)
        for (int m = 0; m < 3; ++m) c.gamma[k][m] = a.gamma[k][m] + b.gamma[k][m];
    return c;
}

// projective shift c + psi (.) id : Gamma^k_ij += d^k_i psi_j + d^k_j psi_i
inline AffineConnection projective_shift(const AffineConnection& c, const Form<1, 2>& psi) {
    AffineConnection r = c;
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                Scalar<2> extra = Scalar<2>::constant(0.0);
                if (k == i) extra = extra + psi[j];
                if (k == j) extra = extra + psi[i];
                const int m = AffineConnection::sym_index(i, j);
                r.gamma[k][m] = r.gamma[k][m] + extra;
            }
    return r;
}

}  // namespace spindle
