#pragma once

// Example graphs: graph products of cyclic groups, cactus groups J_n, the S3
// dual-cactus graph, the three-vertex Garside graph, and the affine quandle graph.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyadic.hpp"
#include "graph.hpp"

namespace trickle {

// Trivial order and identity phi over a simplicial graph.
inline FiniteGraph graph_product(const std::vector<std::string>& ids, const std::vector<Mu>& mus,
                                 const std::vector<std::pair<std::string, std::string>>& edges) {
    GraphSpec spec;
    for (std::size_t i = 0; i < ids.size(); ++i) spec.add_vertex(ids[i], mus[i]);
    spec.edges = edges;
    return FiniteGraph(spec);
}

// Path (cycle = false) or cycle on v1..vn with a constant label.
inline FiniteGraph graph_product_on(std::size_t n, bool cycle, Mu mu) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back("v" + std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(ids[i - 1], ids[i]);
    if (cycle && n >= 3) edges.emplace_back(ids[n - 1], ids[0]);
    return graph_product(ids, std::vector<Mu>(n, mu), edges);
}

// Complete graph on v1..vn: the direct product of cyclic groups (free abelian when mu is infinite).
inline FiniteGraph complete_graph_product(std::size_t n, Mu mu) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(ids[i], ids[j]);
    return graph_product(ids, std::vector<Mu>(n, mu), edges);
}

inline FiniteGraph raag_path(std::size_t n) { return graph_product_on(n, false, Mu::infinite()); }
inline FiniteGraph raag_cycle(std::size_t n) { return graph_product_on(n, true, Mu::infinite()); }
inline FiniteGraph racg_path(std::size_t n) { return graph_product_on(n, false, Mu::finite(2)); }
inline FiniteGraph racg_cycle(std::size_t n) { return graph_product_on(n, true, Mu::finite(2)); }

inline std::string interval_name(int p, int q) { return "[" + std::to_string(p) + "," + std::to_string(q) + "]"; }

// Cactus group J_n: intervals [p,q], strict inclusion, nested-or-disjoint edges,
// mu = 2, phi_[p,q]([m,r]) = [p+q-r, p+q-m] for [m,r] strictly inside [p,q].
inline FiniteGraph cactus(int n) {
    if (n < 2) throw std::invalid_argument("cactus: n must be >= 2");
    GraphSpec spec;
    std::vector<std::pair<int, int>> iv;
    for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) iv.emplace_back(p, q);
    for (auto [p, q] : iv) spec.add_vertex(interval_name(p, q), Mu::finite(2));
    for (auto [p, q] : iv)
        for (auto [m, r] : iv) {
            if (std::pair{p, q} == std::pair{m, r}) continue;
            bool inside = p <= m && r <= q;
            bool contains = m <= p && q <= r;
            bool disjoint = q < m || r < p;
            if (inside) {
                spec.less.emplace_back(interval_name(m, r), interval_name(p, q));
                spec.phi[interval_name(p, q)].emplace_back(interval_name(m, r), interval_name(p + q - r, p + q - m));
            }
            if ((inside || contains || disjoint) && std::pair{p, q} < std::pair{m, r})
                spec.edges.emplace_back(interval_name(p, q), interval_name(m, r));
        }
    return FiniteGraph(spec);
}

// x, y, z < u; mu = 2, 2, 2, 3; phi_u: z -> x -> y -> z.
inline FiniteGraph dual_cactus_s3() {
    GraphSpec spec;
    spec.add_vertex("u", Mu::finite(3));
    for (auto v : {"x", "y", "z"}) {
        spec.add_vertex(v, Mu::finite(2));
        spec.less.emplace_back(v, "u");
        spec.edges.emplace_back(v, "u");
    }
    spec.phi["u"] = {{"z", "x"}, {"x", "y"}, {"y", "z"}};
    return FiniteGraph(spec);
}

// Complete graph on x, y, z; y, z < x incomparable; phi_x swaps y and z; mu = inf.
inline FiniteGraph gar3() {
    GraphSpec spec;
    for (auto v : {"x", "y", "z"}) spec.add_vertex(v, Mu::infinite());
    spec.less = {{"y", "x"}, {"z", "x"}};
    spec.edges = {{"x", "y"}, {"x", "z"}, {"y", "z"}};
    spec.phi["x"] = {{"y", "z"}, {"z", "y"}};
    return FiniteGraph(spec);
}

// Complete graph on dyadic rationals with phi_x(y) = (x + y)/2 for y <= x.
class AffineQuandleGraph {
public:
    using vertex_type = Dyadic;

    bool edge(const Dyadic& x, const Dyadic& y) const { return x != y; }
    bool less(const Dyadic& x, const Dyadic& y) const { return x < y; }
    Mu mu(const Dyadic&) const { return Mu::infinite(); }
    Dyadic phi(const Dyadic& x, const Dyadic& y) const { return y <= x ? (x + y).half() : y; }
    Dyadic phi_inv(const Dyadic& x, const Dyadic& y) const { return y <= x ? y.scaled(1) - x : y; }
    bool precedes(const Dyadic& x, const Dyadic& y) const { return x < y; }
    std::string name(const Dyadic& x) const { return x.str(); }
    std::optional<Dyadic> parse_vertex(const std::string& s) const {
        try {
            return Dyadic::parse(s);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
};

}  // namespace trickle
