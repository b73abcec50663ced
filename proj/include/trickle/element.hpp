#pragma once

// Group elements held as canonical pilings, words over V and V^-1, normal forms.

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "piling.hpp"

namespace trickle {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class V>
struct Letter {
    V vertex{};
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

template <class V>
using Word = std::vector<Letter<V>>;

// Splits "v", "v^k" or "v^{k}" into the vertex token and the exponent.
inline std::pair<std::string, std::int64_t> split_power(std::string_view tok) {
    auto caret = tok.rfind('^');
    if (caret == std::string_view::npos) return {std::string(tok), 1};
    std::string_view e = tok.substr(caret + 1);
    if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
    std::size_t i = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? 1 : 0;
    bool numeric = i < e.size();
    for (std::size_t j = i; j < e.size(); ++j) numeric = numeric && e[j] >= '0' && e[j] <= '9';
    if (!numeric) return {std::string(tok), 1};
    std::int64_t k;
    try {
        k = std::stoll(std::string(e));
    } catch (const std::exception&) {
        throw ParseError("exponent out of range in '" + std::string(tok) + "'");
    }
    return {std::string(tok.substr(0, caret)), k};
}

inline std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

// Parses a list of (vertex, exponent) tokens; errors name the offending token.
template <TrickleGraphLike G>
std::vector<std::pair<typename G::vertex_type, std::int64_t>> parse_powers(const G& g, std::string_view s) {
    std::vector<std::pair<typename G::vertex_type, std::int64_t>> out;
    auto toks = tokenize(s);
    for (std::size_t i = 0; i < toks.size(); ++i) {
        auto [name, k] = split_power(toks[i]);
        auto v = g.parse_vertex(name);
        if (!v) throw ParseError("token " + std::to_string(i + 1) + " ('" + toks[i] + "'): unknown vertex '" + name + "'");
        if (k == 0) throw ParseError("token " + std::to_string(i + 1) + " ('" + toks[i] + "'): zero exponent");
        out.emplace_back(*v, k);
    }
    return out;
}

template <TrickleGraphLike G>
Word<typename G::vertex_type> parse_word(const G& g, std::string_view s) {
    Word<typename G::vertex_type> w;
    for (auto& [v, k] : parse_powers(g, s)) {
        const int sign = k > 0 ? 1 : -1;
        if (k > 1'000'000 || k < -1'000'000) throw ParseError("exponent too large to expand: " + std::to_string(k));
        for (std::int64_t j = 0; j < (k > 0 ? k : -k); ++j) w.push_back({v, sign});
    }
    return w;
}

template <TrickleGraphLike G>
std::string format_word(const G& g, const Word<typename G::vertex_type>& w) {
    std::string s;
    for (auto& l : w) {
        if (!s.empty()) s += ' ';
        s += g.name(l.vertex);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

template <TrickleGraphLike G>
Word<typename G::vertex_type> inverse_word(const Word<typename G::vertex_type>& w) {
    Word<typename G::vertex_type> r(w.rbegin(), w.rend());
    for (auto& l : r) l.sign = -l.sign;
    return r;
}

template <TrickleGraphLike G>
class GroupElement {
public:
    using vertex_type = typename G::vertex_type;

    explicit GroupElement(const G& g) : graph_(&g) {}
    GroupElement(const G& g, Piling<vertex_type> p) : graph_(&g), piling_(normalize(g, std::move(p))) {}

    const G& graph() const { return *graph_; }
    const Piling<vertex_type>& piling() const { return piling_; }
    bool is_identity() const { return piling_.empty(); }

    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        if (a.graph_ != b.graph_) throw std::invalid_argument("elements of different graphs");
        return a.piling_ == b.piling_;
    }

private:
    const G* graph_;
    Piling<vertex_type> piling_;
};

template <TrickleGraphLike G>
GroupElement<G> identity(const G& g) {
    return GroupElement<G>(g);
}

// Each power v^k becomes the singleton stratum ({v^k}); the piling is then normalized.
template <TrickleGraphLike G>
GroupElement<G> from_powers(const G& g, const std::vector<std::pair<typename G::vertex_type, std::int64_t>>& ps) {
    Piling<typename G::vertex_type> p;
    for (auto& [v, k] : ps)
        if (auto s = make_syllable(g, v, k)) p.push_back({*s});
    return GroupElement<G>(g, std::move(p));
}

template <TrickleGraphLike G>
GroupElement<G> from_word(const G& g, const Word<typename G::vertex_type>& w) {
    std::vector<std::pair<typename G::vertex_type, std::int64_t>> ps;
    for (auto& l : w) ps.emplace_back(l.vertex, l.sign);
    return from_powers(g, ps);
}

template <TrickleGraphLike G>
GroupElement<G> from_string(const G& g, std::string_view s) {
    return from_powers(g, parse_powers(g, s));
}

// Letters of one syllable x^a: rho(a) copies of x for finite mu, |a| copies of x^sign(a) otherwise.
template <TrickleGraphLike G>
void expand_syllable(const G& g, const Syllable<typename G::vertex_type>& s, Word<typename G::vertex_type>& out) {
    if (g.mu(s.vertex).is_finite()) {
        for (std::int64_t i = 0; i < s.exp; ++i) out.push_back({s.vertex, 1});
    } else {
        const int sign = s.exp > 0 ? 1 : -1;
        for (std::int64_t i = 0; i < (s.exp > 0 ? s.exp : -s.exp); ++i) out.push_back({s.vertex, sign});
    }
}

template <TrickleGraphLike G>
Word<typename G::vertex_type> piling_word(const G& g, const Piling<typename G::vertex_type>& p) {
    Word<typename G::vertex_type> w;
    for (auto& u : p)
        for (auto& s : u) expand_syllable(g, s, w);
    return w;
}

template <TrickleGraphLike G>
Word<typename G::vertex_type> nf(const GroupElement<G>& x) {
    return piling_word(x.graph(), x.piling());
}

template <TrickleGraphLike G>
std::string nf_string(const GroupElement<G>& x) {
    return format_word(x.graph(), nf(x));
}

template <TrickleGraphLike G>
GroupElement<G> multiply(const GroupElement<G>& a, const GroupElement<G>& b) {
    if (&a.graph() != &b.graph()) throw std::invalid_argument("multiply: elements of different graphs");
    Piling<typename G::vertex_type> p = a.piling();
    p.insert(p.end(), b.piling().begin(), b.piling().end());
    return GroupElement<G>(a.graph(), std::move(p));
}

template <TrickleGraphLike G>
GroupElement<G> invert(const GroupElement<G>& a) {
    return from_word(a.graph(), inverse_word<G>(nf(a)));
}

template <TrickleGraphLike G>
GroupElement<G> power(const GroupElement<G>& a, int k) {
    GroupElement<G> r = identity(a.graph());
    GroupElement<G> base = k >= 0 ? a : invert(a);
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = multiply(r, base);
    return r;
}

template <TrickleGraphLike G>
bool equal(const G& g, std::string_view w1, std::string_view w2) {
    return from_string(g, w1) == from_string(g, w2);
}

struct FinitenessAnswer {
    bool finite = false;
    std::optional<std::uint64_t> order;  // unset if finite but beyond 64 bits
    std::string reason;
};

// Finite iff complete with all labels finite; the order is then the product of the labels.
inline FinitenessAnswer is_finite(const FiniteGraph& g) {
    FinitenessAnswer ans;
    for (std::uint32_t x = 0; x < g.size(); ++x)
        for (std::uint32_t y = x + 1; y < g.size(); ++y)
            if (!g.edge(x, y)) {
                ans.reason = "not complete: {" + g.name(x) + "," + g.name(y) + "} is not an edge";
                return ans;
            }
    for (std::uint32_t x = 0; x < g.size(); ++x)
        if (g.mu(x).is_infinite()) {
            ans.reason = "mu(" + g.name(x) + ") is infinite";
            return ans;
        }
    ans.finite = true;
    std::uint64_t order = 1;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
        if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(g.mu(x).value), &order)) {
            ans.reason = "order exceeds 64 bits";
            return ans;
        }
    }
    ans.order = order;
    return ans;
}

template <TrickleGraphLike G>
    requires(!std::same_as<G, FiniteGraph>)
FinitenessAnswer is_finite(const G&) {
    return {false, std::nullopt, "lazy graph with infinitely many vertices"};
}

}  // namespace trickle
