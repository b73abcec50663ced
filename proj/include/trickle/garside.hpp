#pragma once

// Positive monoid of a graph with all labels infinite: divisibility, atom
// divisors, square-free elements, the Garside element, and atom-set lcms.
// Right-sided notions are computed as left-sided ones in the dual graph on
// reversed words.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "parabolic.hpp"
#include "validate.hpp"

namespace trickle {

using FiniteElement = GroupElement<FiniteGraph>;

inline bool is_pregarside_graph(const FiniteGraph& g) {
    for (auto x : g.vertices())
        if (g.mu(x).is_finite()) return false;
    return true;
}

template <TrickleGraphLike G>
    requires(!std::same_as<G, FiniteGraph>)
bool is_pregarside_graph(const G&) {
    return false;
}

inline void require_pregarside(const FiniteGraph& g) {
    if (!is_pregarside_graph(g)) throw std::invalid_argument("graph has a finite label; not preGarside");
}

inline bool is_positive(const FiniteElement& g) {
    require_pregarside(g.graph());
    for (auto& u : g.piling())
        for (auto& s : u)
            if (s.exp < 0) return false;
    return true;
}

inline bool left_divides(const FiniteElement& a, const FiniteElement& b) {
    return is_positive(multiply(invert(a), b));
}

// The same element read backwards in `target`, which must share vertex ids (e.g. the dual).
inline FiniteElement reversed_in(const FiniteElement& a, const FiniteGraph& target) {
    auto w = nf(a);
    std::reverse(w.begin(), w.end());
    return from_word(target, w);
}

inline bool right_divides(const FiniteElement& a, const FiniteElement& b, const FiniteGraph& dual) {
    return left_divides(reversed_in(a, dual), reversed_in(b, dual));
}

inline bool right_divides(const FiniteElement& a, const FiniteElement& b) {
    const FiniteGraph dual = a.graph().dual();
    return right_divides(a, b, dual);
}

// psi(first-stratum support), psi = phi_{x1}^{a1} o ... o phi_{xq}^{aq}.
inline VertexSet atom_left_divisors(const FiniteElement& g) {
    if (!is_positive(g)) throw std::invalid_argument("atom_left_divisors: element is not positive");
    VertexSet out;
    if (g.piling().empty()) return out;
    const auto& first = g.piling().front();
    for (auto& s : first) {
        auto v = s.vertex;
        for (std::size_t i = first.size(); i-- > 0;) v = phi_pow(g.graph(), first[i].vertex, first[i].exp, v);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline VertexSet atom_right_divisors(const FiniteElement& g, const FiniteGraph& dual) {
    return atom_left_divisors(reversed_in(g, dual));
}

inline VertexSet atom_right_divisors(const FiniteElement& g) {
    const FiniteGraph dual = g.graph().dual();
    return atom_right_divisors(g, dual);
}

inline bool is_garside(const FiniteGraph& g) {
    require_pregarside(g);
    return g.is_complete();
}

template <TrickleGraphLike G>
    requires(!std::same_as<G, FiniteGraph>)
bool is_garside(const G&) {
    return false;
}

// Product of the vertices of `subset` in descending rank order.
inline FiniteElement descending_product(const FiniteGraph& g, VertexSet subset) {
    std::sort(subset.begin(), subset.end(), [&](auto a, auto b) { return g.rank(a) > g.rank(b); });
    Word<FiniteGraph::vertex_type> w;
    for (auto v : subset) w.push_back({v, 1});
    return from_word(g, w);
}

inline void require_garside(const FiniteGraph& g) {
    if (!is_garside(g)) throw std::invalid_argument("graph is not complete; no Garside element");
}

// All 2^n square-free elements, listed by subset size then subset.
inline std::vector<FiniteElement> square_free(const FiniteGraph& g) {
    require_garside(g);
    if (g.size() > 20) throw std::invalid_argument("square_free: too many vertices");
    std::vector<std::uint32_t> masks(std::size_t{1} << g.size());
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
    std::vector<FiniteElement> out;
    for (auto m : masks) {
        VertexSet s;
        for (std::uint32_t v = 0; v < g.size(); ++v)
            if (m >> v & 1) s.push_back(v);
        out.push_back(descending_product(g, s));
    }
    return out;
}

inline FiniteElement garside_element(const FiniteGraph& g) {
    require_garside(g);
    return descending_product(g, g.vertices());
}

// The square-free element whose atom left divisors are exactly X.
inline FiniteElement lcm_atoms(const FiniteGraph& g, VertexSet x_set) {
    require_garside(g);
    x_set = normalize_set(std::move(x_set));
    for (auto& h : square_free(g))
        if (atom_left_divisors(h) == x_set) return h;
    throw std::logic_error("lcm_atoms: no square-free element has these atom divisors");
}

// Positive elements of letter length exactly 0..max_len, deduplicated.
inline std::vector<std::vector<FiniteElement>> positive_elements_by_length(const FiniteGraph& g, int max_len) {
    require_pregarside(g);
    std::vector<std::vector<FiniteElement>> layers{{identity(g)}};
    std::set<Piling<FiniteGraph::vertex_type>> seen{identity(g).piling()};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<FiniteElement> next;
        for (auto& e : layers.back())
            for (auto v : g.vertices()) {
                auto f = multiply(e, from_word(g, Word<FiniteGraph::vertex_type>{{v, 1}}));
                if (seen.insert(f.piling()).second) next.push_back(f);
            }
        layers.push_back(std::move(next));
    }
    return layers;
}

// The left-least common multiple of a and b among positive elements of length <= max_len.
inline std::optional<FiniteElement> lcm_bruteforce(const FiniteElement& a, const FiniteElement& b, int max_len) {
    std::vector<FiniteElement> common;
    for (auto& layer : positive_elements_by_length(a.graph(), max_len))
        for (auto& c : layer)
            if (left_divides(a, c) && left_divides(b, c)) common.push_back(c);
    for (auto& c : common) {
        bool least = true;
        for (auto& d : common) least = least && left_divides(c, d);
        if (least) return c;
    }
    return std::nullopt;
}

namespace detail {

// Values of the partial complement: a vertex, the empty word, or undefined.
struct Complement {
    enum Kind { vertex, empty, undefined } kind = undefined;
    FiniteGraph::vertex_type v = 0;
    friend bool operator==(const Complement&, const Complement&) = default;
};

// x * y = phi_y(x) on edges, x * x = e * x = e, x * e = x, undefined otherwise.
inline Complement complement(const FiniteGraph& g, Complement x, Complement y) {
    if (x.kind == Complement::undefined || y.kind == Complement::undefined) return {};
    if (x.kind == Complement::empty) return {Complement::empty};
    if (y.kind == Complement::empty) return x;
    if (x.v == y.v) return {Complement::empty};
    if (!g.edge(x.v, y.v)) return {};
    return {Complement::vertex, g.phi(y.v, x.v)};
}

inline void theta_cube_side(const FiniteGraph& g, const std::string& rule, ValidationReport& r) {
    auto vx = [](FiniteGraph::vertex_type v) { return Complement{Complement::vertex, v}; };
    for (auto x : g.vertices())
        for (auto y : g.vertices())
            for (auto z : g.vertices()) {
                if (x == y || y == z || x == z) continue;
                auto a = complement(g, complement(g, vx(z), vx(x)), complement(g, vx(y), vx(x)));
                auto b = complement(g, complement(g, vx(z), vx(y)), complement(g, vx(x), vx(y)));
                const bool all_edges = g.edge(x, y) && g.edge(y, z) && g.edge(x, z);
                const bool da = a.kind != Complement::undefined, db = b.kind != Complement::undefined;
                if (da != all_edges || db != all_edges)
                    r.add(rule, {g.name(x), g.name(y), g.name(z)}, "definedness does not match the triangle");
                else if (da && !(a == b))
                    r.add(rule, {g.name(x), g.name(y), g.name(z)}, "(z*x)*(y*x) != (z*y)*(x*y)");
            }
}

}  // namespace detail

// Claims 1 and 2 of the theta-cube condition on the graph (left) and on its dual (right).
inline ValidationReport theta_cube_check(const FiniteGraph& g) {
    ValidationReport r;
    detail::theta_cube_side(g, "theta-left", r);
    detail::theta_cube_side(g.dual(), "theta-right", r);
    return r;
}

}  // namespace trickle
