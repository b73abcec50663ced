#pragma once

// Bounded enumeration of the critical pairs of the piling rewriting system and
// their resolution by normalizing both sides.
//
//   C1  (empty, W), z in W:       T(empty, W, z)  vs  deleting the empty stratum
//   C2  (U, V, W), y in V, z in W: T(U, V, y) . W  vs  U . T(V, W, z)
//   C3  (U, V), y != y' in V:     T(U, V, y)      vs  T(U, V, y')
//
// Pairs where one side's move does not apply are not divergent and are skipped.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "element.hpp"
#include "graph.hpp"
#include "piling.hpp"

namespace trickle {

using FStratum = Stratum<FiniteGraph::vertex_type>;
using FPiling = Piling<FiniteGraph::vertex_type>;

enum class PairCase { C1, C2, C3 };

inline const char* case_name(PairCase c) {
    switch (c) {
        case PairCase::C1: return "C1";
        case PairCase::C2: return "C2";
        case PairCase::C3: return "C3";
    }
    return "?";
}

struct CriticalPair {
    PairCase kind;
    FStratum u, v, w;          // C1 uses w only; C3 uses u, v
    std::size_t slot1 = 0;     // syllable moved on the first side
    std::size_t slot2 = 0;     // syllable moved on the second side
};

struct PairOutcome {
    bool resolved = true;
    FPiling left, right;  // normal forms of the two successors
};

inline std::string format_stratum(const FiniteGraph& g, const FStratum& u) {
    std::string s = "{";
    for (std::size_t i = 0; i < u.size(); ++i)
        s += (i ? ", " : "") + g.name(u[i].vertex) + "^" + std::to_string(u[i].exp);
    return s + "}";
}

inline std::string format_piling(const FiniteGraph& g, const FPiling& p) {
    std::string s;
    for (auto& u : p) s += format_stratum(g, u);
    return s.empty() ? "()" : s;
}

inline std::string describe(const FiniteGraph& g, const CriticalPair& cp) {
    std::string s = case_name(cp.kind);
    switch (cp.kind) {
        case PairCase::C1: s += " W=" + format_stratum(g, cp.w); break;
        case PairCase::C2:
            s += " U=" + format_stratum(g, cp.u) + " V=" + format_stratum(g, cp.v) + " W=" + format_stratum(g, cp.w);
            break;
        case PairCase::C3: s += " U=" + format_stratum(g, cp.u) + " V=" + format_stratum(g, cp.v); break;
    }
    return s + " slots " + std::to_string(cp.slot1) + "," + std::to_string(cp.slot2);
}

// Every stratum with at most `max_support` syllables; exponents range over all
// nonzero residues for finite labels and over +-1..+-max_exp otherwise.
inline std::vector<FStratum> enumerate_strata(const FiniteGraph& g, std::size_t max_support, int max_exp) {
    std::vector<std::vector<std::int64_t>> exps(g.size());
    for (auto v : g.vertices()) {
        if (g.mu(v).is_finite())
            for (std::int64_t a = 1; a < g.mu(v).value; ++a) exps[v].push_back(a);
        else
            for (std::int64_t a = 1; a <= max_exp; ++a) {
                exps[v].push_back(-a);
                exps[v].push_back(a);
            }
    }
    std::vector<FStratum> out;
    std::vector<FiniteGraph::vertex_type> clique;
    auto emit = [&](auto&& self, std::size_t i, FStratum& cur) -> void {
        if (i == clique.size()) {
            FStratum s = cur;
            sort_stratum(g, s);
            out.push_back(std::move(s));
            return;
        }
        for (auto a : exps[clique[i]]) {
            cur.push_back({clique[i], a});
            self(self, i + 1, cur);
            cur.pop_back();
        }
    };
    auto grow = [&](auto&& self, FiniteGraph::vertex_type next) -> void {
        if (!clique.empty()) {
            FStratum cur;
            emit(emit, 0, cur);
        }
        if (clique.size() == max_support) return;
        for (auto v = next; v < g.size(); ++v) {
            bool ok = true;
            for (auto c : clique) ok = ok && g.edge(c, v);
            if (!ok) continue;
            clique.push_back(v);
            self(self, v + 1);
            clique.pop_back();
        }
    };
    grow(grow, 0);
    return out;
}

// Normal forms of two-stratum pilings. A C2 side rewrites one pair first, and
// that pair recurs across the whole sweep; normalizing it first is itself a
// rewriting sequence, so cached prefixes still give reachable irreducible forms.
class PairNormalCache {
public:
    explicit PairNormalCache(const FiniteGraph& g) : g_(&g) {}

    const FPiling& get(FStratum first, FStratum second) {
        FPiling key{std::move(first), std::move(second)};
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            auto nf = normalize(*g_, key);
            it = cache_.emplace(std::move(key), std::move(nf)).first;
        }
        return it->second;
    }

private:
    struct Hash {
        std::size_t operator()(const FPiling& p) const noexcept {
            std::size_t h = p.size();
            for (auto& u : p) {
                h = h * 0x100000001b3ull + u.size();
                for (auto& s : u)
                    h = (h ^ (s.vertex * 0x9e3779b97f4a7c15ull + static_cast<std::size_t>(s.exp))) * 0x100000001b3ull;
            }
            return h;
        }
    };

    const FiniteGraph* g_;
    std::unordered_map<FPiling, FPiling, Hash> cache_;
};

inline PairOutcome resolve(const FiniteGraph& g, const CriticalPair& cp, PairNormalCache* cache = nullptr) {
    PairOutcome out;
    FPiling a, b;
    switch (cp.kind) {
        case PairCase::C1: {
            auto t = t_transform_at(g, FStratum{}, cp.w, cp.slot1);
            a = {t->first, t->second};
            b = {cp.w};
            break;
        }
        case PairCase::C2: {
            auto t1 = t_transform_at(g, cp.u, cp.v, cp.slot1);
            auto t2 = t_transform_at(g, cp.v, cp.w, cp.slot2);
            if (!t1 || !t2) return out;
            if (cache) {
                a = cache->get(std::move(t1->first), std::move(t1->second));
                a.push_back(cp.w);
                b = {cp.u};
                auto& tail = cache->get(std::move(t2->first), std::move(t2->second));
                b.insert(b.end(), tail.begin(), tail.end());
            } else {
                a = {t1->first, t1->second, cp.w};
                b = {cp.u, t2->first, t2->second};
            }
            break;
        }
        case PairCase::C3: {
            auto t1 = t_transform_at(g, cp.u, cp.v, cp.slot1);
            auto t2 = t_transform_at(g, cp.u, cp.v, cp.slot2);
            if (!t1 || !t2) return out;
            a = {t1->first, t1->second};
            b = {t2->first, t2->second};
            break;
        }
    }
    out.left = normalize(g, std::move(a));
    out.right = normalize(g, std::move(b));
    out.resolved = out.left == out.right;
    return out;
}

struct ConfluenceBounds {
    std::size_t max_support = 3;
    int max_exp = 2;
};

// Calls `f` on every divergent critical pair within the bounds; stops early when `f` returns false.
inline void for_each_critical_pair(const FiniteGraph& g, ConfluenceBounds bounds,
                                   const std::function<bool(const CriticalPair&)>& f) {
    const auto strata = enumerate_strata(g, bounds.max_support, bounds.max_exp);
    const auto n = g.size();

    // gamma[s][k]: the syllable extracted from stratum s at slot k.
    std::vector<std::vector<Syllable<FiniteGraph::vertex_type>>> gamma(strata.size());
    for (std::size_t s = 0; s < strata.size(); ++s)
        for (std::size_t k = 0; k < strata[s].size(); ++k) gamma[s].push_back(stratum_extract_at(g, strata[s], k));

    // accepts[v]: strata U with R(U, v^a) defined; by_gamma[v]: (stratum, slot) extracting a power of v.
    std::vector<std::vector<std::uint32_t>> accepts(n);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_gamma(n);
    for (std::uint32_t s = 0; s < strata.size(); ++s) {
        for (auto v : g.vertices())
            if (stratum_can_add(g, strata[s], {v, 1})) accepts[v].push_back(s);
        for (std::uint32_t k = 0; k < gamma[s].size(); ++k) by_gamma[gamma[s][k].vertex].emplace_back(s, k);
    }

    CriticalPair cp{PairCase::C1, {}, {}, {}};
    for (std::size_t s = 0; s < strata.size(); ++s)
        for (std::size_t k = 0; k < strata[s].size(); ++k) {
            cp.w = strata[s];
            cp.slot1 = k;
            if (!f(cp)) return;
        }

    cp = {PairCase::C3, {}, {}, {}};
    for (std::size_t vs = 0; vs < strata.size(); ++vs) {
        const auto& v = strata[vs];
        if (v.size() < 2) continue;
        for (std::size_t k1 = 0; k1 < v.size(); ++k1)
            for (auto us : accepts[gamma[vs][k1].vertex])
                for (std::size_t k2 = k1 + 1; k2 < v.size(); ++k2) {
                    if (!stratum_can_add(g, strata[us], gamma[vs][k2])) continue;
                    cp.u = strata[us];
                    cp.v = v;
                    cp.slot1 = k1;
                    cp.slot2 = k2;
                    if (!f(cp)) return;
                }
    }

    cp = {PairCase::C2, {}, {}, {}};
    for (std::size_t vs = 0; vs < strata.size(); ++vs) {
        const auto& v = strata[vs];
        std::vector<std::pair<std::uint32_t, std::uint32_t>> right_moves;
        for (auto x : g.vertices())
            if (stratum_can_add(g, v, {x, 1}))
                right_moves.insert(right_moves.end(), by_gamma[x].begin(), by_gamma[x].end());
        if (right_moves.empty()) continue;
        cp.v = v;
        for (std::size_t k1 = 0; k1 < v.size(); ++k1)
            for (auto us : accepts[gamma[vs][k1].vertex]) {
                cp.u = strata[us];
                cp.slot1 = k1;
                for (auto [ws, k2] : right_moves) {
                    cp.w = strata[ws];
                    cp.slot2 = k2;
                    if (!f(cp)) return;
                }
            }
    }
}

struct ConfluenceReport {
    std::uint64_t pairs[3] = {0, 0, 0};
    std::uint64_t failures = 0;
    std::vector<std::string> witnesses;  // first few failures
    bool ok() const { return failures == 0; }
    std::uint64_t total() const { return pairs[0] + pairs[1] + pairs[2]; }
};

inline ConfluenceReport check_critical_pairs(const FiniteGraph& g, ConfluenceBounds bounds = {},
                                             std::size_t max_witnesses = 5) {
    ConfluenceReport r;
    PairNormalCache cache(g);
    for_each_critical_pair(g, bounds, [&](const CriticalPair& cp) {
        ++r.pairs[static_cast<int>(cp.kind)];
        auto out = resolve(g, cp, &cache);
        if (!out.resolved) {
            ++r.failures;
            if (r.witnesses.size() < max_witnesses)
                r.witnesses.push_back(describe(g, cp) + ": " + format_piling(g, out.left) + " vs " +
                                      format_piling(g, out.right));
        }
        return true;
    });
    return r;
}

// Random pilings, each normalized under `strategies` random strategies plus the
// leftmost one; returns the number of pilings whose results disagreed.
template <class Rng>
std::size_t strategy_disagreements(const FiniteGraph& g, const std::vector<FStratum>& strata, std::size_t pilings,
                                   std::size_t strategies, std::size_t max_len, Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, strata.size() - 1), len(1, max_len);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < pilings; ++t) {
        FPiling p;
        for (std::size_t i = len(rng); i > 0; --i) p.push_back(strata[pick(rng)]);
        const auto expected = normalize(g, p);
        for (std::size_t s = 0; s < strategies; ++s)
            if (normalize_random(g, p, rng) != expected) {
                ++bad;
                break;
            }
    }
    return bad;
}

}  // namespace trickle
