#pragma once

// Integer arithmetic of spindle orbifolds: admissible weight pairs, Seifert
// quotient orders and the exact closed-geodesic length spectrum. Lengths are
// exact rational multiples of pi.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spindle/rational.hpp"

namespace spindle::arith {

struct Weights {
    std::int64_t a1 = 1, a2 = 1;

    Weights() = default;
    Weights(std::int64_t a1_, std::int64_t a2_) : a1(a1_), a2(a2_) {
        if (a1 < 1 || a2 < 1 || a1 < a2) throw std::invalid_argument("weights: need a1 >= a2 >= 1");
    }

    std::int64_t gcd() const { return std::gcd(a1, a2); }
    bool coprime_odd() const { return gcd() == 1 && a1 % 2 == 1 && a2 % 2 == 1; }
    std::string str() const { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }
};

// admissibility per the Seifert fibration constraints on RP^3:
// c = gcd(a1,a2) in {1,2}, a1+a2 even, c^3 | a1*a2
inline bool is_admissible(const Weights& w) {
    const std::int64_t c = w.gcd();
    if (c != 1 && c != 2) return false;
    if ((w.a1 + w.a2) % 2 != 0) return false;
    return (w.a1 * w.a2) % (c * c * c) == 0;
}

// k' = k / gcd(k, a1 - a2)
inline std::int64_t seifert_quotient_order(std::int64_t k, const Weights& w) {
    if (k < 1) throw std::invalid_argument("seifert_quotient_order: k must be positive");
    const std::int64_t g = std::gcd(k, w.a1 - w.a2);
    return g == 0 ? 1 : k / g;
}

// weights of the orbifold dual to a constant-curvature Finsler sphere whose
// shortest closed geodesic has length 2*pi*p/q
inline Weights spindle_from_finsler(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || std::gcd(p, q) != 1) throw std::invalid_argument("need coprime p,q >= 1");
    // p/q in (1/2, 1]
    if (!(2 * p > q && p <= q)) throw std::invalid_argument("need 1/2 < p/q <= 1");
    Weights w(q, 2 * p - q);
    if (!is_admissible(w)) throw std::logic_error("spindle_from_finsler produced non-admissible weights");
    return w;
}

enum class LengthRole { shortest, second_exceptional, regular };

struct LengthEntry {
    Rational over_pi;  // length / pi, exact
    LengthRole role;
    double radians() const { return over_pi.value() * M_PI; }
};

struct LengthSpectrum {
    std::int64_t p = 1, q = 1;
    std::vector<LengthEntry> lengths;
};

// Length spectrum of the dual Finsler metric (coprime weights only; the
// constructions downstream all assume gcd(a1,a2)=1).
inline LengthSpectrum length_spectrum(const Weights& w) {
    if (!is_admissible(w)) throw std::invalid_argument("length_spectrum: weights " + w.str() + " not admissible");
    if (w.gcd() != 1)
        throw std::invalid_argument("length_spectrum: weights " + w.str() +
                                    " have gcd 2; only the coprime case is computed here");
    LengthSpectrum s;
    s.p = (w.a1 + w.a2) / 2;
    s.q = w.a1;
    if (w.a1 == 1 && w.a2 == 1) {
        s.lengths.push_back({Rational(2), LengthRole::regular});  // all geodesics, length 2*pi
        return s;
    }
    s.lengths.push_back({Rational(2 * s.p, s.q), LengthRole::shortest});
    if (2 * s.p - s.q > 1) s.lengths.push_back({Rational(2 * s.p, 2 * s.p - s.q), LengthRole::second_exceptional});
    s.lengths.push_back({Rational(2 * s.p), LengthRole::regular});
    return s;
}

}  // namespace spindle::arith
