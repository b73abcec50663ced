#pragma once

// Trickle graphs: the graph, partial order, vertex labels and star automorphisms
// that every other module queries.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace trickle {

// Vertex label: a finite order >= 2, or infinity (stored as 0).
struct Mu {
    std::int64_t value = 0;

    static constexpr Mu infinite() { return Mu{0}; }
    static Mu finite(std::int64_t m) {
        if (m < 2) throw std::invalid_argument("mu must be >= 2, got " + std::to_string(m));
        return Mu{m};
    }
    constexpr bool is_infinite() const { return value == 0; }
    constexpr bool is_finite() const { return value != 0; }
    std::string str() const { return is_infinite() ? "inf" : std::to_string(value); }
    friend bool operator==(const Mu&, const Mu&) = default;
};

// Canonical exponent: residue in [0, m) for finite m, unchanged otherwise.
inline std::int64_t reduce_exponent(std::int64_t a, Mu mu) {
    if (mu.is_infinite()) return a;
    std::int64_t r = a % mu.value;
    return r < 0 ? r + mu.value : r;
}

template <class G>
concept TrickleGraphLike = requires(const G& g, const typename G::vertex_type& v, const std::string& s) {
    typename G::vertex_type;
    { g.edge(v, v) } -> std::convertible_to<bool>;
    { g.less(v, v) } -> std::convertible_to<bool>;
    { g.mu(v) } -> std::convertible_to<Mu>;
    { g.phi(v, v) } -> std::convertible_to<typename G::vertex_type>;
    { g.phi_inv(v, v) } -> std::convertible_to<typename G::vertex_type>;
    { g.precedes(v, v) } -> std::convertible_to<bool>;  // strict total order extending less
    { g.name(v) } -> std::convertible_to<std::string>;
    { g.parse_vertex(s) } -> std::convertible_to<std::optional<typename G::vertex_type>>;
};

template <TrickleGraphLike G>
bool in_star(const G& g, const typename G::vertex_type& x, const typename G::vertex_type& y) {
    return x == y || g.edge(x, y);
}

// phi_x^a(y). Finite graphs reduce a modulo the order of phi_x.
template <TrickleGraphLike G>
typename G::vertex_type phi_pow(const G& g, const typename G::vertex_type& x, std::int64_t a,
                                typename G::vertex_type y) {
    if (!in_star(g, x, y))
        throw std::invalid_argument("phi_pow: " + g.name(y) + " not in star of " + g.name(x));
    if constexpr (requires { g.phi_order(x); }) {
        std::int64_t ord = g.phi_order(x);
        a %= ord;
        if (a < 0) a += ord;
    }
    for (; a > 0; --a) y = g.phi(x, y);
    for (; a < 0; ++a) y = g.phi_inv(x, y);
    return y;
}

// Structural defect found while assembling a graph (before axiom checks).
struct StructuralIssue {
    std::string message;
};

// Raw description of a finite graph, as read from a file or built by a family constructor.
struct GraphSpec {
    std::vector<std::string> ids;
    std::vector<Mu> mus;
    std::vector<std::pair<std::string, std::string>> less;   // a < b, any acyclic relation
    std::vector<std::pair<std::string, std::string>> edges;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> phi;  // x -> [(y, image)]

    void add_vertex(std::string id, Mu mu) {
        ids.push_back(std::move(id));
        mus.push_back(mu);
    }
};

class FiniteGraph {
public:
    using vertex_type = std::uint32_t;

    FiniteGraph() = default;

    // Builds the graph: transitive closure of `less`, identity default for phi,
    // default ranking. Throws on unknown ids, duplicate ids, order cycles.
    // Defects in phi tables are recorded as structural issues, not thrown.
    explicit FiniteGraph(const GraphSpec& spec) {
        const std::size_t n = spec.ids.size();
        if (spec.mus.size() != n) throw std::invalid_argument("ids and mus differ in length");
        names_ = spec.ids;
        mu_ = spec.mus;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate vertex id: " + names_[i]);
        }
        less_.assign(n * n, 0);
        adj_.assign(n * n, 0);
        for (auto& [a, b] : spec.less) {
            auto i = require(a), j = require(b);
            if (i == j) throw std::invalid_argument("order cycle at " + a);
            less_[i * n + j] = 1;
        }
        // Floyd-Warshall style closure; n is small for finite graphs.
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (less_[i * n + k])
                    for (std::size_t j = 0; j < n; ++j)
                        if (less_[k * n + j]) less_[i * n + j] = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (less_[i * n + i]) throw std::invalid_argument("order cycle through " + names_[i]);
        for (auto& [a, b] : spec.edges) {
            auto i = require(a), j = require(b);
            if (i == j) throw std::invalid_argument("self-loop edge at " + a);
            adj_[i * n + j] = adj_[j * n + i] = 1;
        }
        phi_.assign(n * n, 0);
        phi_inv_.assign(n * n, 0);
        for (std::uint32_t x = 0; x < n; ++x)
            for (std::uint32_t y = 0; y < n; ++y) phi_[x * n + y] = phi_inv_[x * n + y] = y;
        for (auto& [xs, entries] : spec.phi) {
            auto x = require(xs);
            for (auto& [ys, zs] : entries) {
                auto y = require(ys), z = require(zs);
                if (!star(x, y)) {
                    issues_.push_back({"phi_" + xs + " defined on " + ys + ", which is outside its star"});
                    continue;
                }
                if (!star(x, z)) {
                    issues_.push_back({"phi_" + xs + " sends " + ys + " to " + zs + ", outside its star"});
                    continue;
                }
                phi_[x * n + y] = z;
            }
        }
        finish_phi();
        set_default_ranking();
    }

    std::size_t size() const { return names_.size(); }
    std::vector<vertex_type> vertices() const {
        std::vector<vertex_type> v(size());
        for (vertex_type i = 0; i < v.size(); ++i) v[i] = i;
        return v;
    }

    bool edge(vertex_type x, vertex_type y) const { return adj_[x * size() + y]; }
    bool less(vertex_type x, vertex_type y) const { return less_[x * size() + y]; }
    bool leq(vertex_type x, vertex_type y) const { return x == y || less(x, y); }
    bool comparable(vertex_type x, vertex_type y) const { return leq(x, y) || leq(y, x); }
    bool star(vertex_type x, vertex_type y) const { return x == y || edge(x, y); }
    Mu mu(vertex_type x) const { return mu_[x]; }
    vertex_type phi(vertex_type x, vertex_type y) const { return phi_[x * size() + y]; }
    vertex_type phi_inv(vertex_type x, vertex_type y) const { return phi_inv_[x * size() + y]; }
    std::int64_t phi_order(vertex_type x) const { return phi_order_[x]; }

    bool precedes(vertex_type x, vertex_type y) const { return rank_[x] < rank_[y]; }
    std::uint32_t rank(vertex_type x) const { return rank_[x]; }
    // Vertices in increasing ranking order.
    const std::vector<vertex_type>& ranking() const { return by_rank_; }

    const std::string& name(vertex_type x) const { return names_[x]; }
    std::optional<vertex_type> parse_vertex(const std::string& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    vertex_type at(const std::string& s) const { return require(s); }

    const std::vector<StructuralIssue>& structural_issues() const { return issues_; }

    bool is_complete() const {
        for (vertex_type x = 0; x < size(); ++x)
            for (vertex_type y = x + 1; y < size(); ++y)
                if (!edge(x, y)) return false;
        return true;
    }

    // Replace the ranking; `ascending` must list every vertex once and extend less.
    void set_ranking(const std::vector<vertex_type>& ascending) {
        const std::size_t n = size();
        if (ascending.size() != n) throw std::invalid_argument("ranking must list every vertex exactly once");
        std::vector<std::uint32_t> r(n, UINT32_MAX);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (ascending[i] >= n || r[ascending[i]] != UINT32_MAX)
                throw std::invalid_argument("ranking must list every vertex exactly once");
            r[ascending[i]] = i;
        }
        for (vertex_type x = 0; x < n; ++x)
            for (vertex_type y = 0; y < n; ++y)
                if (less(x, y) && r[x] > r[y])
                    throw std::invalid_argument("ranking puts " + names_[y] + " below " + names_[x] +
                                                " but " + names_[x] + " < " + names_[y]);
        rank_ = std::move(r);
        by_rank_ = ascending;
    }

    // Same graph with every phi_x replaced by its inverse.
    FiniteGraph dual() const {
        FiniteGraph d = *this;
        std::swap(d.phi_, d.phi_inv_);
        return d;
    }

    // Full subgraph on `subset` with restricted order, labels, phi and ranking.
    // phi entries leaving the subset are dropped (identity), so only meaningful
    // when the subset is parabolic.
    FiniteGraph induced(const std::vector<vertex_type>& subset) const {
        GraphSpec spec;
        std::vector<vertex_type> sorted = subset;
        std::sort(sorted.begin(), sorted.end(), [&](auto a, auto b) { return rank_[a] < rank_[b]; });
        std::vector<char> in(size(), 0);
        for (auto v : sorted) in[v] = 1;
        for (auto v : sorted) spec.add_vertex(names_[v], mu_[v]);
        for (auto x : sorted)
            for (auto y : sorted) {
                if (less(x, y)) spec.less.emplace_back(names_[x], names_[y]);
                if (x < y && edge(x, y)) spec.edges.emplace_back(names_[x], names_[y]);
                if (x != y && edge(x, y) && phi(x, y) != y && in[phi(x, y)])
                    spec.phi[names_[x]].emplace_back(names_[y], names_[phi(x, y)]);
            }
        FiniteGraph g(spec);
        std::vector<vertex_type> asc;
        for (auto v : sorted) asc.push_back(g.at(names_[v]));
        g.set_ranking(asc);
        return g;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, vertex_type> index_;
    std::vector<Mu> mu_;
    std::vector<char> less_, adj_;
    std::vector<vertex_type> phi_, phi_inv_;
    std::vector<std::int64_t> phi_order_;
    std::vector<std::uint32_t> rank_;
    std::vector<vertex_type> by_rank_;
    std::vector<StructuralIssue> issues_;

    vertex_type require(const std::string& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + s);
        return it->second;
    }

    // Check bijectivity and adjacency preservation of each phi_x on its star,
    // then fill phi_inv and the order of each phi_x.
    void finish_phi() {
        const std::size_t n = size();
        phi_order_.assign(n, 1);
        for (vertex_type x = 0; x < n; ++x) {
            std::vector<vertex_type> st;
            for (vertex_type y = 0; y < n; ++y)
                if (star(x, y)) st.push_back(y);
            std::vector<int> hits(n, 0);
            for (auto y : st) ++hits[phi(x, y)];
            bool bijective = std::all_of(st.begin(), st.end(), [&](auto y) { return hits[y] == 1; });
            if (!bijective) {
                issues_.push_back({"phi_" + names_[x] + " is not a bijection of its star"});
                for (auto y : st) phi_[x * n + y] = y;
                continue;
            }
            for (auto y : st) phi_inv_[x * n + phi(x, y)] = y;
            for (auto y : st)
                for (auto z : st)
                    if (y < z && edge(y, z) != edge(phi(x, y), phi(x, z)))
                        issues_.push_back({"phi_" + names_[x] + " does not preserve adjacency of " + names_[y] +
                                           " and " + names_[z]});
            // Order of phi_x: iterate on the star until it returns to the identity.
            std::vector<vertex_type> cur = st;
            std::int64_t k = 0;
            do {
                for (auto& v : cur) v = phi(x, v);
                ++k;
            } while (cur != st);
            phi_order_[x] = k;
        }
    }

    // Kahn's algorithm; among available vertices pick the lexicographically smallest id.
    void set_default_ranking() {
        const std::size_t n = size();
        std::vector<int> indeg(n, 0);
        for (vertex_type x = 0; x < n; ++x)
            for (vertex_type y = 0; y < n; ++y)
                if (less(x, y)) ++indeg[y];
        auto cmp = [&](vertex_type a, vertex_type b) { return names_[a] > names_[b]; };
        std::priority_queue<vertex_type, std::vector<vertex_type>, decltype(cmp)> ready(cmp);
        for (vertex_type v = 0; v < n; ++v)
            if (indeg[v] == 0) ready.push(v);
        std::vector<vertex_type> order;
        while (!ready.empty()) {
            auto v = ready.top();
            ready.pop();
            order.push_back(v);
            for (vertex_type y = 0; y < n; ++y)
                if (less(v, y) && --indeg[y] == 0) ready.push(y);
        }
        set_ranking(order);
    }
};

}  // namespace trickle
