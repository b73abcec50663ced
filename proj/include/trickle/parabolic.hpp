#pragma once

// Parabolic subgraphs and membership in standard parabolic subgroups.

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "element.hpp"
#include "graph.hpp"

namespace trickle {

using VertexSet = std::vector<FiniteGraph::vertex_type>;

// Sorted, deduplicated copy.
inline VertexSet normalize_set(VertexSet x) {
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    return x;
}

inline VertexSet parse_vertex_list(const FiniteGraph& g, const std::string& csv) {
    VertexSet out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        auto tok = csv.substr(start, comma - start);
        if (!tok.empty()) out.push_back(g.at(tok));
        start = comma + 1;
    }
    return normalize_set(std::move(out));
}

// phi_x and its inverse keep star_x(X) inside X for every x in X.
inline bool is_parabolic(const FiniteGraph& g, const VertexSet& x_set) {
    std::vector<char> in(g.size(), 0);
    for (auto v : x_set) {
        if (v >= g.size()) throw std::invalid_argument("is_parabolic: unknown vertex");
        in[v] = 1;
    }
    for (auto x : x_set)
        for (auto y : x_set)
            if (g.star(x, y) && (!in[g.phi(x, y)] || !in[g.phi_inv(x, y)])) return false;
    return true;
}

inline VertexSet downward_closure(const FiniteGraph& g, const VertexSet& x_set) {
    VertexSet out;
    for (auto y : g.vertices())
        for (auto x : x_set)
            if (g.leq(y, x)) {
                out.push_back(y);
                break;
            }
    return out;
}

class ParabolicSubgraph {
public:
    ParabolicSubgraph(const FiniteGraph& parent, VertexSet x_set)
        : parent_(&parent), set_(normalize_set(std::move(x_set))) {
        if (!is_parabolic(parent, set_)) throw std::invalid_argument("vertex set is not parabolic");
        in_.assign(parent.size(), 0);
        for (auto v : set_) in_[v] = 1;
        induced_ = std::make_shared<const FiniteGraph>(parent.induced(set_));
    }

    const FiniteGraph& parent() const { return *parent_; }
    const VertexSet& vertices() const { return set_; }
    const FiniteGraph& induced() const { return *induced_; }
    bool contains(FiniteGraph::vertex_type v) const { return v < in_.size() && in_[v]; }

private:
    const FiniteGraph* parent_;
    VertexSet set_;
    std::vector<char> in_;
    std::shared_ptr<const FiniteGraph> induced_;
};

// g lies in the subgroup iff its normal form only uses letters of X.
inline bool member(const GroupElement<FiniteGraph>& g, const ParabolicSubgraph& p) {
    if (&g.graph() != &p.parent()) throw std::invalid_argument("member: element of a different graph");
    for (auto& u : g.piling())
        for (auto& s : u)
            if (!p.contains(s.vertex)) return false;
    return true;
}

inline ParabolicSubgraph intersect(const ParabolicSubgraph& a, const ParabolicSubgraph& b) {
    if (&a.parent() != &b.parent()) throw std::invalid_argument("intersect: different parent graphs");
    VertexSet common;
    std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end(),
                          std::back_inserter(common));
    return ParabolicSubgraph(a.parent(), std::move(common));
}

}  // namespace trickle
