#pragma once

// Thompson's group F as a trickle group on the dyadic rationals plus infinity.
//
// V_0 = Z. Between consecutive points a < b of V_p, V_{p+1} adds
// b - (b - a)/2^k for k >= 1, accumulating at b from the left. Each vertex x
// acts by a piecewise-linear map h_x that fixes [x, +inf) and shifts the
// segments of the sequence v_k (v_k -> x) one step to the left; h_inf is t - 1.

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include "dyadic.hpp"
#include "graph.hpp"

namespace trickle {

struct FVertex {
    bool infinite = false;
    Dyadic value;

    static FVertex inf() { return {true, Dyadic(0)}; }
    static FVertex at(Dyadic d) { return {false, d}; }

    friend bool operator==(const FVertex& a, const FVertex& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend std::strong_ordering operator<=>(const FVertex& a, const FVertex& b) {
        if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
        return a.value <=> b.value;
    }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

// Position of a non-integer x inside V_level: x = right - (right - left)/2^k
// with left < right consecutive in V_{level-1} and k >= 1.
struct DyadicFrame {
    int level = 0;
    Dyadic left, right;
    int k = 0;
};

inline DyadicFrame frame(const Dyadic& x) {
    if (x.is_integer()) return {0, x, x + Dyadic(1), 0};
    Dyadic a(x.floor()), b = a + Dyadic(1);
    for (int p = 0;; ++p) {
        const Dyadic w = b - a;
        for (int k = 1;; ++k) {
            const Dyadic pt = b - w.scaled(-k);
            if (pt == x) return {p + 1, a, b, k};
            if (pt > x) {
                a = b - w.scaled(-(k - 1));
                b = pt;
                break;
            }
        }
    }
}

inline int level(const Dyadic& x) { return frame(x).level; }

// s_p(x): the next point after x in V_p.
inline Dyadic succ(int p, const Dyadic& x) {
    const auto f = frame(x);
    if (f.level > p) throw std::invalid_argument("succ: " + x.str() + " is not in V_" + std::to_string(p));
    const Dyadic own = f.level == 0 ? x + Dyadic(1) : (x + f.right).half();
    return x + (own - x).scaled(-(p - f.level));
}

// t_p(x): the previous term of the sequence that produced x (x - 1 on integers).
inline Dyadic pred(int p, const Dyadic& x) {
    const auto f = frame(x);
    if (f.level > p) throw std::invalid_argument("pred: " + x.str() + " is not in V_" + std::to_string(p));
    if (f.level == 0) return x - Dyadic(1);
    return f.right - (f.right - f.left).scaled(-(f.k - 1));
}

inline Dyadic pred(const Dyadic& x) { return pred(level(x), x); }

namespace detail {

inline constexpr int f_segment_cap = 100000;

// Affine map sending [lo, hi] onto [lo2, hi2], evaluated at t.
inline Dyadic affine(const Dyadic& t, const Dyadic& lo, const Dyadic& hi, const Dyadic& lo2, const Dyadic& hi2) {
    return lo2 + (t - lo).scaled((hi2 - lo2).log2_ratio(hi - lo));
}

}  // namespace detail

// h_x(t) (forward) or h_x^{-1}(t).
inline Dyadic h_eval(const FVertex& x, const Dyadic& t, bool inverse) {
    if (x.infinite) return inverse ? t + Dyadic(1) : t - Dyadic(1);
    const Dyadic& c = x.value;
    if (t >= c) return t;
    const Dyadic v0 = pred(c);
    const Dyadic d = c - v0;
    auto v = [&](int m) { return c - d.scaled(-m); };  // v_m for m >= 0
    if (t >= v0) {
        int m = 0;
        while (v(m + 1) <= t)
            if (++m > 62) throw std::runtime_error("h_eval: segment index exceeds dyadic precision");
        if (inverse) return detail::affine(t, v(m), v(m + 1), v(m + 1), v(m + 2));
        return detail::affine(t, v(m), v(m + 1), m == 0 ? pred(v0) : v(m - 1), v(m));
    }
    // Walk v_{-1}, v_{-2}, ... down; below an integer term the map is a unit translation.
    Dyadic above = v(1), hi = v0;
    for (int guard = 0; guard < detail::f_segment_cap; ++guard) {
        if (!inverse && hi.is_integer()) return t - Dyadic(1);
        const Dyadic lo = pred(hi);
        if (t >= lo) {
            if (inverse) return detail::affine(t, lo, hi, hi, above);
            return detail::affine(t, lo, hi, pred(lo), lo);
        }
        if (inverse && hi.is_integer()) return t + Dyadic(1);
        above = hi;
        hi = lo;
    }
    throw std::runtime_error("h_eval: segment search exceeded its cap");
}

inline Dyadic h_apply(const FVertex& x, const Dyadic& t) { return h_eval(x, t, false); }
inline Dyadic h_apply_inv(const FVertex& x, const Dyadic& t) { return h_eval(x, t, true); }

// Complete graph on FVertex, totally ordered with infinity on top, mu = inf, phi_x = h_x.
class FGraph {
public:
    using vertex_type = FVertex;

    bool edge(const FVertex& x, const FVertex& y) const { return !(x == y); }
    bool less(const FVertex& x, const FVertex& y) const { return x < y; }
    Mu mu(const FVertex&) const { return Mu::infinite(); }
    FVertex phi(const FVertex& x, const FVertex& y) const {
        return y.infinite ? y : FVertex::at(h_apply(x, y.value));
    }
    FVertex phi_inv(const FVertex& x, const FVertex& y) const {
        return y.infinite ? y : FVertex::at(h_apply_inv(x, y.value));
    }
    bool precedes(const FVertex& x, const FVertex& y) const { return x < y; }
    std::string name(const FVertex& x) const { return x.str(); }
    std::optional<FVertex> parse_vertex(const std::string& s) const {
        if (s == "inf" || s == "∞") return FVertex::inf();
        try {
            return FVertex::at(Dyadic::parse(s));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
};

}  // namespace trickle

template <>
struct std::hash<trickle::FVertex> {
    std::size_t operator()(const trickle::FVertex& v) const noexcept {
        return v.infinite ? 0x9e3779b97f4a7c15ull : std::hash<trickle::Dyadic>{}(v.value);
    }
};
