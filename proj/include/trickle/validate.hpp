#pragma once

// Axiom checks (a)-(g) for finite graphs, and sampled checks for lazy ones.

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "graph.hpp"

namespace trickle {

struct Violation {
    std::string rule;                  // "structural", "a".."g", "inverse", "theta-claim1", ...
    std::vector<std::string> witness;  // vertex names
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool vacuous = false;

    bool valid() const { return violations.empty(); }
    bool has(const std::string& rule) const {
        for (auto& v : violations)
            if (v.rule == rule) return true;
        return false;
    }
    const Violation* first(const std::string& rule) const {
        for (auto& v : violations)
            if (v.rule == rule) return &v;
        return nullptr;
    }
    void add(std::string rule, std::vector<std::string> witness, std::string detail = {}) {
        violations.push_back({std::move(rule), std::move(witness), std::move(detail)});
    }
};

inline std::ostream& operator<<(std::ostream& os, const Violation& v) {
    if (v.rule == "structural") {
        os << "structural error: " << v.detail;
        return os;
    }
    if (v.rule.size() == 1) os << "axiom (" << v.rule << ") violated";
    else os << v.rule << " violated";
    os << ", witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? ", " : "") << v.witness[i];
    os << ")";
    if (!v.detail.empty()) os << ": " << v.detail;
    return os;
}

inline std::ostream& operator<<(std::ostream& os, const ValidationReport& r) {
    if (r.valid()) return os << (r.vacuous ? "valid (vacuous)" : "valid") << '\n';
    for (auto& v : r.violations) os << v << '\n';
    return os;
}

// Checks every axiom over all vertex tuples; (g) over all chains z < y < x.
// Structural issues recorded at construction come first; axiom checks still run
// on the phi tables as repaired (identity where undefined).
inline ValidationReport validate(const FiniteGraph& g) {
    ValidationReport r;
    for (auto& issue : g.structural_issues()) r.add("structural", {}, issue.message);
    const auto n = static_cast<std::uint32_t>(g.size());
    auto nm = [&](std::uint32_t v) { return g.name(v); };

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (g.less(x, y) && !g.edge(x, y)) r.add("a", {nm(x), nm(y)}, nm(x) + " < " + nm(y) + " but no edge");

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (!g.edge(x, y) || g.comparable(x, y)) continue;
            for (std::uint32_t z = 0; z < n; ++z) {
                if (z == y || !g.less(z, y)) continue;
                if (!g.edge(x, z) || g.comparable(x, z))
                    r.add("b", {nm(x), nm(y), nm(z)}, "edge {" + nm(x) + "," + nm(y) + "} with " + nm(x) + " || " +
                                                         nm(y) + " and " + nm(z) + " < " + nm(y));
            }
        }

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (!g.star(x, y)) continue;
            for (std::uint32_t z = 0; z < n; ++z) {
                if (!g.star(x, z)) continue;
                if (g.leq(z, y) != g.leq(g.phi(x, z), g.phi(x, y)))
                    r.add("c", {nm(x), nm(y), nm(z)}, "phi_" + nm(x) + " does not preserve " + nm(z) + " vs " + nm(y));
            }
        }

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (g.star(x, y) && g.phi(x, y) != y && !g.less(y, x))
                r.add("d", {nm(x), nm(y)}, "phi_" + nm(x) + " moves " + nm(y) + " which is not below " + nm(x));

    for (std::uint32_t x = 0; x < n; ++x)
        if (g.mu(x).is_finite() && g.mu(x).value % g.phi_order(x) != 0)
            r.add("e", {nm(x)}, "phi_" + nm(x) + " has order " + std::to_string(g.phi_order(x)) +
                                    ", not dividing mu = " + g.mu(x).str());

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (g.star(x, y) && !(g.mu(g.phi(x, y)) == g.mu(y)))
                r.add("f", {nm(x), nm(y)}, "mu changes under phi_" + nm(x));

    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            if (!g.less(y, x)) continue;
            const auto y2 = g.phi(x, y);
            for (std::uint32_t z = 0; z < n; ++z) {
                if (!g.less(z, y)) continue;
                auto lhs = g.phi(x, g.phi(y, z));
                auto rhs = g.phi(y2, g.phi(x, z));
                if (lhs != rhs)
                    r.add("g", {nm(x), nm(y), nm(z)},
                          "phi_x(phi_y(z)) = " + nm(lhs) + " but phi_y'(phi_x(z)) = " + nm(rhs));
            }
        }
    return r;
}

namespace detail {

template <TrickleGraphLike G>
bool leq(const G& g, const typename G::vertex_type& a, const typename G::vertex_type& b) {
    return a == b || g.less(a, b);
}

// Every axiom instance whose roles are drawn from (x, y, z) in this order.
template <TrickleGraphLike G>
void check_roles(const G& g, const typename G::vertex_type& x, const typename G::vertex_type& y,
                 const typename G::vertex_type& z, ValidationReport& r) {
    auto nm = [&](const auto& v) { return g.name(v); };
    auto star = [&](const auto& a, const auto& b) { return in_star(g, a, b); };
    auto incomparable = [&](const auto& a, const auto& b) { return !leq(g, a, b) && !leq(g, b, a); };

    if (x != y && g.less(x, y) && !g.edge(x, y)) r.add("a", {nm(x), nm(y)});
    if (x != y && g.edge(x, y) != g.edge(y, x)) r.add("structural", {}, "edge relation not symmetric");
    if (x != y && g.edge(x, y) && incomparable(x, y) && z != y && g.less(z, y) &&
        (!g.edge(x, z) || !incomparable(x, z)))
        r.add("b", {nm(x), nm(y), nm(z)});
    if (star(x, y)) {
        auto py = g.phi(x, y);
        if (!(g.phi_inv(x, py) == y)) r.add("inverse", {nm(x), nm(y)}, "phi_inv(phi(y)) != y");
        if (!(g.phi(x, g.phi_inv(x, y)) == y)) r.add("inverse", {nm(x), nm(y)}, "phi(phi_inv(y)) != y");
        if (!star(x, py)) r.add("structural", {}, "phi_" + nm(x) + " leaves the star at " + nm(y));
        if (py != y && !g.less(y, x)) r.add("d", {nm(x), nm(y)});
        if (!(g.mu(py) == g.mu(y))) r.add("f", {nm(x), nm(y)});
        if (g.mu(x).is_finite()) {
            auto w = y;
            for (std::int64_t i = 0; i < g.mu(x).value; ++i) w = g.phi(x, w);
            if (!(w == y)) r.add("e", {nm(x)}, "phi_" + nm(x) + "^mu moves " + nm(y));
        }
        if (star(x, z) && leq(g, z, y) != leq(g, g.phi(x, z), py)) r.add("c", {nm(x), nm(y), nm(z)});
    }
    if (g.less(y, x) && g.less(z, y)) {
        auto y2 = g.phi(x, y);
        if (!(g.phi(x, g.phi(y, z)) == g.phi(y2, g.phi(x, z)))) r.add("g", {nm(x), nm(y), nm(z)});
    }
}

}  // namespace detail

// Checks (a)-(g) and phi/phi_inv consistency on the supplied triples only,
// under every assignment of the three entries to the roles x, y, z.
template <TrickleGraphLike G>
ValidationReport spot_check(const G& g, const std::vector<std::array<typename G::vertex_type, 3>>& samples) {
    ValidationReport r;
    if (samples.empty()) {
        r.vacuous = true;
        return r;
    }
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& t : samples)
        for (auto& p : perms) detail::check_roles(g, t[p[0]], t[p[1]], t[p[2]], r);
    return r;
}

}  // namespace trickle
