#pragma once

// Syllables, strata and pilings, with the operations L, gamma, R, the
// T-transformations, and normalization to the unique irreducible piling.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace trickle {

template <class V>
struct Syllable {
    V vertex{};
    std::int64_t exp = 1;

    friend bool operator==(const Syllable&, const Syllable&) = default;
    friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// Syllables with distinct, pairwise adjacent vertices, kept in descending ranking order.
template <class V>
using Stratum = std::vector<Syllable<V>>;

template <class V>
using Piling = std::vector<Stratum<V>>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

// Canonical syllable x^a, or nullopt when a vanishes in Z_mu(x).
template <TrickleGraphLike G>
std::optional<Syllable<typename G::vertex_type>> make_syllable(const G& g, typename G::vertex_type x,
                                                               std::int64_t a) {
    a = reduce_exponent(a, g.mu(x));
    if (a == 0) return std::nullopt;
    return Syllable<typename G::vertex_type>{std::move(x), a};
}

template <TrickleGraphLike G>
void sort_stratum(const G& g, Stratum<typename G::vertex_type>& u) {
    std::sort(u.begin(), u.end(), [&](const auto& a, const auto& b) { return g.precedes(b.vertex, a.vertex); });
}

// Distinct, pairwise adjacent supports and canonical exponents.
template <TrickleGraphLike G>
bool is_stratum(const G& g, const Stratum<typename G::vertex_type>& u) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i].exp == 0 || reduce_exponent(u[i].exp, g.mu(u[i].vertex)) != u[i].exp) return false;
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i].vertex == u[j].vertex || !g.edge(u[i].vertex, u[j].vertex)) return false;
    }
    return true;
}

template <class V>
std::ptrdiff_t find_vertex(const Stratum<V>& u, const V& x) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i].vertex == x) return static_cast<std::ptrdiff_t>(i);
    return -1;
}

// L(U, s) = U \ {s}.
template <class V>
Stratum<V> stratum_remove(const Stratum<V>& u, const Syllable<V>& s) {
    Stratum<V> out;
    bool found = false;
    for (auto& t : u) {
        if (!found && t == s) found = true;
        else out.push_back(t);
    }
    if (!found) throw std::invalid_argument("stratum_remove: syllable not in stratum");
    return out;
}

// gamma(U, x_i^a_i) = ((phi_{x_1}^{a_1} o ... o phi_{x_{i-1}}^{a_{i-1}})(x_i))^{a_i}, U descending.
template <TrickleGraphLike G>
Syllable<typename G::vertex_type> stratum_extract_at(const G& g, const Stratum<typename G::vertex_type>& u,
                                                     std::size_t i) {
    auto v = u[i].vertex;
    for (std::size_t j = i; j-- > 0;) v = phi_pow(g, u[j].vertex, u[j].exp, v);
    return {v, u[i].exp};
}

template <TrickleGraphLike G>
Syllable<typename G::vertex_type> stratum_extract(const G& g, const Stratum<typename G::vertex_type>& u,
                                                  const Syllable<typename G::vertex_type>& s) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] == s) return stratum_extract_at(g, u, i);
    throw std::invalid_argument("stratum_extract: syllable not in stratum");
}

template <TrickleGraphLike G>
bool stratum_can_add(const G& g, const Stratum<typename G::vertex_type>& u,
                     const Syllable<typename G::vertex_type>& s) {
    for (auto& t : u) {
        if (t.vertex == s.vertex) return true;
    }
    for (auto& t : u)
        if (!g.edge(t.vertex, s.vertex)) return false;
    return true;
}

// R(U, y^b): conjugate the other syllables by phi_y^{-b}, then insert, merge or cancel y.
template <TrickleGraphLike G>
Stratum<typename G::vertex_type> stratum_add(const G& g, const Stratum<typename G::vertex_type>& u,
                                             const Syllable<typename G::vertex_type>& s) {
    if (!stratum_can_add(g, u, s)) throw std::invalid_argument("stratum_add: syllable cannot be added");
    Stratum<typename G::vertex_type> out;
    out.reserve(u.size() + 1);
    bool present = false;
    for (auto& t : u) {
        if (t.vertex == s.vertex) {
            present = true;
            if (auto m = make_syllable(g, s.vertex, checked_add(t.exp, s.exp))) out.push_back(*m);
        } else {
            out.push_back({phi_pow(g, s.vertex, -s.exp, t.vertex), t.exp});
        }
    }
    if (!present) out.push_back(s);
    sort_stratum(g, out);
    return out;
}

// T(U, V, s); nullopt when gamma(V, s) cannot be added to U.
template <TrickleGraphLike G>
std::optional<std::pair<Stratum<typename G::vertex_type>, Stratum<typename G::vertex_type>>> t_transform_at(
    const G& g, const Stratum<typename G::vertex_type>& u, const Stratum<typename G::vertex_type>& v,
    std::size_t i) {
    auto moved = stratum_extract_at(g, v, i);
    if (!stratum_can_add(g, u, moved)) return std::nullopt;
    Stratum<typename G::vertex_type> rest = v;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return std::pair{stratum_add(g, u, moved), std::move(rest)};
}

template <TrickleGraphLike G>
std::optional<std::pair<Stratum<typename G::vertex_type>, Stratum<typename G::vertex_type>>> t_transform(
    const G& g, const Stratum<typename G::vertex_type>& u, const Stratum<typename G::vertex_type>& v,
    const Syllable<typename G::vertex_type>& s) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] == s) return t_transform_at(g, u, v, i);
    throw std::invalid_argument("t_transform: syllable not in second stratum");
}

template <class V>
void drop_empty(Piling<V>& p) {
    std::erase_if(p, [](const Stratum<V>& s) { return s.empty(); });
}

// Leftmost sweep: at pair (i, i+1) try the syllables of the second stratum in
// descending order; after a change step back one pair. Empty strata are dropped.
template <TrickleGraphLike G>
Piling<typename G::vertex_type> normalize(const G& g, Piling<typename G::vertex_type> p) {
    drop_empty(p);
    std::size_t i = 0;
    while (i + 1 < p.size()) {
        bool changed = false;
        for (std::size_t k = 0; k < p[i + 1].size(); ++k) {
            if (auto r = t_transform_at(g, p[i], p[i + 1], k)) {
                p[i] = std::move(r->first);
                p[i + 1] = std::move(r->second);
                changed = true;
                break;
            }
        }
        if (!changed) {
            ++i;
            continue;
        }
        if (p[i + 1].empty()) p.erase(p.begin() + static_cast<std::ptrdiff_t>(i + 1));
        if (p[i].empty()) p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        i = i > 0 ? i - 1 : 0;
    }
    return p;
}

template <TrickleGraphLike G>
bool is_irreducible(const G& g, const Piling<typename G::vertex_type>& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) return false;
        if (i + 1 < p.size())
            for (std::size_t k = 0; k < p[i + 1].size(); ++k)
                if (t_transform_at(g, p[i], p[i + 1], k)) return false;
    }
    return true;
}

// One rewriting step: delete empty stratum `index`, or T on pair (index, index+1) moving syllable `slot`.
struct RewriteStep {
    bool delete_empty = false;
    std::size_t index = 0;
    std::size_t slot = 0;
};

template <TrickleGraphLike G>
std::vector<RewriteStep> applicable_rewrites(const G& g, const Piling<typename G::vertex_type>& p) {
    std::vector<RewriteStep> steps;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].empty()) steps.push_back({true, i, 0});
        if (i + 1 < p.size())
            for (std::size_t k = 0; k < p[i + 1].size(); ++k)
                if (stratum_can_add(g, p[i], stratum_extract_at(g, p[i + 1], k))) steps.push_back({false, i, k});
    }
    return steps;
}

template <TrickleGraphLike G>
void apply_rewrite(const G& g, Piling<typename G::vertex_type>& p, const RewriteStep& step) {
    if (step.delete_empty) {
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(step.index));
        return;
    }
    auto r = t_transform_at(g, p[step.index], p[step.index + 1], step.slot);
    if (!r) throw std::logic_error("apply_rewrite: step not applicable");
    p[step.index] = std::move(r->first);
    p[step.index + 1] = std::move(r->second);
}

// Rewrites with uniformly random choices among applicable steps until irreducible.
template <TrickleGraphLike G, class Rng>
Piling<typename G::vertex_type> normalize_random(const G& g, Piling<typename G::vertex_type> p, Rng& rng) {
    for (;;) {
        auto steps = applicable_rewrites(g, p);
        if (steps.empty()) return p;
        std::uniform_int_distribution<std::size_t> pick(0, steps.size() - 1);
        apply_rewrite(g, p, steps[pick(rng)]);
    }
}

// Termination weight r + sum i*|U_i| of a piling (U_1, ..., U_r).
template <class V>
std::size_t piling_weight(const Piling<V>& p) {
    std::size_t w = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) w += (i + 1) * p[i].size();
    return w;
}

}  // namespace trickle
