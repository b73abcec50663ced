#pragma once

// The kernel graph KJ_n on tuples of distinct entries, and the word problem in
// the virtual cactus group VJ_n = KJ_n x| S_n.

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "families.hpp"
#include "graph.hpp"

namespace trickle {

using Tuple = std::vector<int>;

inline std::string tuple_name(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

// Start position (0-based) of `sub` as a contiguous block of `t`, or -1.
inline int block_position(const Tuple& t, const Tuple& sub) {
    if (sub.size() > t.size()) return -1;
    for (std::size_t i = 0; i + sub.size() <= t.size(); ++i)
        if (std::equal(sub.begin(), sub.end(), t.begin() + static_cast<std::ptrdiff_t>(i))) return static_cast<int>(i);
    return -1;
}

inline std::vector<Tuple> kjn_tuples(int n) {
    std::vector<Tuple> out;
    Tuple cur;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    auto rec = [&](auto&& self) -> void {
        if (cur.size() >= 2) out.push_back(cur);
        if (static_cast<int>(cur.size()) == n) return;
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[v] = 0;
        }
    };
    rec(rec);
    std::stable_sort(out.begin(), out.end(), [](const Tuple& a, const Tuple& b) { return a.size() < b.size(); });
    return out;
}

// Order: contiguous subtuple. Edge: comparable or disjoint supports. mu = 2.
// phi_y(t_p..t_q) = (t_{1+l-q}, ..., t_{1+l-p}) for a proper block of y.
// Built as a stored graph rather than a predicate oracle, since the engine's
// finite-graph path needs dense tables (n <= 5 is 320 vertices).
inline FiniteGraph kjn_graph(int n) {
    if (n < 2) throw std::invalid_argument("kjn_graph: n must be >= 2");
    auto tuples = kjn_tuples(n);
    GraphSpec spec;
    for (auto& t : tuples) spec.add_vertex(tuple_name(t), Mu::finite(2));
    for (std::size_t i = 0; i < tuples.size(); ++i)
        for (std::size_t j = 0; j < tuples.size(); ++j) {
            if (i == j) continue;
            const Tuple& y = tuples[i];
            const Tuple& s = tuples[j];
            const int pos = block_position(y, s);
            if (pos >= 0) {
                spec.less.emplace_back(tuple_name(s), tuple_name(y));
                const int l = static_cast<int>(y.size());
                const int p = pos + 1, q = pos + static_cast<int>(s.size());
                Tuple img(y.begin() + (l - q), y.begin() + (l - p + 1));
                if (img != s) spec.phi[tuple_name(y)].emplace_back(tuple_name(s), tuple_name(img));
            }
            if (i < j) {
                bool comparable = pos >= 0 || block_position(s, y) >= 0;
                bool disjoint = true;
                for (int a : y)
                    for (int b : s) disjoint = disjoint && a != b;
                if (comparable || disjoint) spec.edges.emplace_back(tuple_name(y), tuple_name(s));
            }
        }
    return FiniteGraph(spec);
}

// One VJ_n letter: x[p,q] (generator of J_n) or r<i> (virtual crossing s_i).
struct VjnLetter {
    bool crossing = false;
    int p = 0, q = 0;  // interval for x[p,q]; p = i for r<i>
};

inline std::vector<VjnLetter> parse_vjn_word(int n, std::string_view s) {
    std::vector<VjnLetter> out;
    auto toks = tokenize(s);
    for (std::size_t k = 0; k < toks.size(); ++k) {
        auto [body, e] = split_power(toks[k]);
        auto fail = [&](const std::string& why) {
            throw ParseError("token " + std::to_string(k + 1) + " ('" + toks[k] + "'): " + why);
        };
        VjnLetter l;
        try {
            if (body.size() >= 2 && body[0] == 'r') {
                std::size_t used = 0;
                l.crossing = true;
                l.p = std::stoi(body.substr(1), &used);
                if (used != body.size() - 1) fail("malformed crossing");
                if (l.p < 1 || l.p > n - 1) fail("crossing index out of range");
            } else if (body.size() >= 6 && body.rfind("x[", 0) == 0 && body.back() == ']') {
                auto comma = body.find(',');
                if (comma == std::string::npos) fail("malformed generator");
                std::size_t u1 = 0, u2 = 0;
                l.p = std::stoi(body.substr(2, comma - 2), &u1);
                l.q = std::stoi(body.substr(comma + 1, body.size() - comma - 2), &u2);
                if (u1 != comma - 2 || u2 != body.size() - comma - 2) fail("malformed generator");
                if (!(1 <= l.p && l.p < l.q && l.q <= n)) fail("interval out of range");
            } else {
                fail("expected x[p,q] or r<i>");
            }
        } catch (const std::logic_error& ex) {
            if (dynamic_cast<const ParseError*>(&ex)) throw;
            fail("malformed number");
        }
        // Every generator is an involution, so only the parity of the exponent matters.
        if (e % 2 != 0) out.push_back(l);
    }
    return out;
}

class VirtualCactus {
public:
    using Kernel = GroupElement<FiniteGraph>;

    struct Element {
        Kernel kernel;
        std::vector<int> perm;  // one-line notation, perm[i-1] = w(i)
        friend bool operator==(const Element& a, const Element& b) { return a.perm == b.perm && a.kernel == b.kernel; }
    };

    explicit VirtualCactus(int n) : n_(n), graph_(std::make_unique<FiniteGraph>(kjn_graph(n))) {}

    int n() const { return n_; }
    const FiniteGraph& kernel_graph() const { return *graph_; }

    // Left-to-right fold: r_i updates w := w s_i; x[p,q] appends delta_{w.(p..q)}.
    Element encode(const std::vector<VjnLetter>& word) const {
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i) perm[i] = i + 1;
        Word<FiniteGraph::vertex_type> kernel;
        for (auto& l : word) {
            if (l.crossing) {
                std::swap(perm[l.p - 1], perm[l.p]);
                continue;
            }
            Tuple t;
            for (int k = l.p; k <= l.q; ++k) t.push_back(perm[k - 1]);
            kernel.push_back({graph_->at(tuple_name(t)), 1});
        }
        return {from_word(*graph_, kernel), perm};
    }
    Element encode(std::string_view word) const { return encode(parse_vjn_word(n_, word)); }

    bool equal(std::string_view w1, std::string_view w2) const { return encode(w1) == encode(w2); }

private:
    int n_;
    std::unique_ptr<FiniteGraph> graph_;
};

// Word over J_n generators as a list of intervals.
using IntervalWord = std::vector<std::pair<int, int>>;

inline std::string cactus_word_string(const IntervalWord& w) {
    std::string s;
    for (auto [p, q] : w) s += (s.empty() ? "" : " ") + interval_name(p, q);
    return s;
}

inline std::string vjn_word_string(const IntervalWord& w) {
    std::string s;
    for (auto [p, q] : w) s += (s.empty() ? "" : " ") + ("x" + interval_name(p, q));
    return s;
}

// For each pair: equality in J_n (cactus engine) must match equality in VJ_n.
inline bool jn_embedding_check(const FiniteGraph& jn, const VirtualCactus& vj,
                               const std::vector<std::pair<IntervalWord, IntervalWord>>& samples) {
    for (auto& [a, b] : samples) {
        bool in_j = from_string(jn, cactus_word_string(a)) == from_string(jn, cactus_word_string(b));
        bool in_vj = vj.equal(vjn_word_string(a), vjn_word_string(b));
        if (in_j != in_vj) return false;
    }
    return true;
}

inline bool jn_embedding_check(int n, const std::vector<std::pair<IntervalWord, IntervalWord>>& samples) {
    auto jn = cactus(n);
    VirtualCactus vj(n);
    return jn_embedding_check(jn, vj, samples);
}

}  // namespace trickle
