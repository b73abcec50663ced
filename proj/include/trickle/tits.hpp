#pragma once

// Syllabic words and the Tits-style systems: R_I (merge/cancel equal vertices),
// R_II (swap across an edge), and reduction to the syllabic normal form.

#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "element.hpp"
#include "piling.hpp"

namespace trickle {

template <class V>
using SyllabicWord = std::vector<Syllable<V>>;

template <TrickleGraphLike G>
SyllabicWord<typename G::vertex_type> parse_syllabic(const G& g, std::string_view s) {
    SyllabicWord<typename G::vertex_type> w;
    for (auto& [v, k] : parse_powers(g, s)) {
        auto syl = make_syllable(g, v, k);
        if (!syl) throw ParseError("syllable " + g.name(v) + "^" + std::to_string(k) + " is trivial");
        w.push_back(*syl);
    }
    return w;
}

template <TrickleGraphLike G>
std::string format_syllabic(const G& g, const SyllabicWord<typename G::vertex_type>& w) {
    std::string s;
    for (auto& x : w) {
        if (!s.empty()) s += ' ';
        s += g.name(x.vertex);
        if (x.exp != 1) s += "^" + std::to_string(x.exp);
    }
    return s;
}

// (x^a, x^b) -> x^{a+b}, or nothing when a + b = 0 in Z_mu(x).
template <TrickleGraphLike G>
SyllabicWord<typename G::vertex_type> apply_I(const G& g, const SyllabicWord<typename G::vertex_type>& w,
                                              std::size_t pos) {
    if (pos + 1 >= w.size() || !(w[pos].vertex == w[pos + 1].vertex))
        throw std::invalid_argument("apply_I: positions do not share a vertex");
    SyllabicWord<typename G::vertex_type> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
    if (auto s = make_syllable(g, w[pos].vertex, checked_add(w[pos].exp, w[pos + 1].exp))) out.push_back(*s);
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 2), w.end());
    return out;
}

// (x^a, y^b) -> (phi_x^a(y)^b, phi_y^{-b}(x)^a) across an edge {x, y}.
template <TrickleGraphLike G>
SyllabicWord<typename G::vertex_type> apply_II(const G& g, const SyllabicWord<typename G::vertex_type>& w,
                                               std::size_t pos) {
    if (pos + 1 >= w.size() || !g.edge(w[pos].vertex, w[pos + 1].vertex))
        throw std::invalid_argument("apply_II: no edge between the two syllables");
    auto out = w;
    const auto& [x, a] = w[pos];
    const auto& [y, b] = w[pos + 1];
    out[pos] = {phi_pow(g, x, a, y), b};
    out[pos + 1] = {phi_pow(g, y, -b, x), a};
    return out;
}

// Normal form nf^S: normalize the piling of singleton strata, read strata as descending runs.
template <TrickleGraphLike G>
SyllabicWord<typename G::vertex_type> syllabic_reduce(const G& g, const SyllabicWord<typename G::vertex_type>& w) {
    Piling<typename G::vertex_type> p;
    for (auto& s : w) p.push_back({s});
    SyllabicWord<typename G::vertex_type> out;
    for (auto& u : normalize(g, std::move(p)))
        for (auto& s : u) out.push_back(s);
    return out;
}

template <TrickleGraphLike G>
bool is_syllabically_reduced(const G& g, const SyllabicWord<typename G::vertex_type>& w) {
    return syllabic_reduce(g, w).size() == w.size();
}

enum class OrbitResult { connected, not_connected, bound_exceeded };

// Breadth-first search over R_II moves from w, looking for v. Both must be reduced.
template <TrickleGraphLike G>
OrbitResult ii_connected(const G& g, const SyllabicWord<typename G::vertex_type>& w,
                         const SyllabicWord<typename G::vertex_type>& v, std::size_t bound = 100000) {
    if (!is_syllabically_reduced(g, w) || !is_syllabically_reduced(g, v))
        throw std::invalid_argument("ii_connected: inputs must be syllabically reduced");
    if (w.size() != v.size()) return OrbitResult::not_connected;
    std::set<SyllabicWord<typename G::vertex_type>> seen{w};
    std::deque<SyllabicWord<typename G::vertex_type>> queue{w};
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        if (cur == v) return OrbitResult::connected;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (!g.edge(cur[i].vertex, cur[i + 1].vertex)) continue;
            auto next = apply_II(g, cur, i);
            if (seen.insert(next).second) {
                if (seen.size() > bound) return OrbitResult::bound_exceeded;
                queue.push_back(std::move(next));
            }
        }
    }
    return OrbitResult::not_connected;
}

// Tits-style reduction without the piling engine: explore the R_II orbit and
// apply an R_I move as soon as some word in it has two adjacent equal vertices.
// Returns nullopt if an orbit exceeds `bound`.
template <TrickleGraphLike G>
std::optional<SyllabicWord<typename G::vertex_type>> tits_reduce(const G& g, SyllabicWord<typename G::vertex_type> w,
                                                                  std::size_t bound = 100000) {
    for (;;) {
        std::set<SyllabicWord<typename G::vertex_type>> seen{w};
        std::deque<SyllabicWord<typename G::vertex_type>> queue{w};
        bool shortened = false;
        while (!queue.empty() && !shortened) {
            auto cur = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                if (cur[i].vertex == cur[i + 1].vertex) {
                    w = apply_I(g, cur, i);
                    shortened = true;
                    break;
                }
                if (!g.edge(cur[i].vertex, cur[i + 1].vertex)) continue;
                auto next = apply_II(g, cur, i);
                if (seen.insert(next).second) {
                    if (seen.size() > bound) return std::nullopt;
                    queue.push_back(std::move(next));
                }
            }
        }
        if (!shortened) return w;
    }
}

}  // namespace trickle
