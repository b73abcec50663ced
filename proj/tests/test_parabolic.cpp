#include <gtest/gtest.h>

#include <random>
#include <set>

#include <trickle/parabolic.hpp>

#include "fixtures.hpp"

using namespace trickle;

namespace {

VertexSet names(const FiniteGraph& g, std::initializer_list<const char*> ns) {
    VertexSet out;
    for (auto n : ns) out.push_back(g.at(n));
    return normalize_set(out);
}

// Random parabolic subsets: random subsets kept when parabolic, closed downward otherwise.
std::vector<VertexSet> random_parabolic_sets(const FiniteGraph& g, std::mt19937& rng, std::size_t count) {
    std::set<VertexSet> seen;
    std::bernoulli_distribution coin(0.35);
    while (seen.size() < count) {
        VertexSet x;
        for (auto v : g.vertices())
            if (coin(rng)) x.push_back(v);
        if (x.empty() || x.size() == g.size()) continue;
        if (!is_parabolic(g, x)) x = downward_closure(g, x);
        if (x.size() < g.size()) seen.insert(x);
    }
    return {seen.begin(), seen.end()};
}

std::string random_word(const FiniteGraph& g, const VertexSet& pool, std::mt19937& rng, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::string s;
    for (int i = 0; i < len; ++i) s += (i ? " " : "") + g.name(pool[pick(rng)]);
    return s;
}

}  // namespace

TEST(IsParabolic, Examples) {
    auto j = fixtures::j3();
    EXPECT_TRUE(is_parabolic(j, names(j, {"b", "c"})));
    EXPECT_FALSE(is_parabolic(j, names(j, {"a", "b"})));
    EXPECT_TRUE(is_parabolic(j, j.vertices()));
    EXPECT_THROW(is_parabolic(j, {99}), std::invalid_argument);
}

TEST(DownwardClosure, Examples) {
    auto j = fixtures::j3();
    EXPECT_EQ(downward_closure(j, names(j, {"a"})), j.vertices());
    EXPECT_TRUE(downward_closure(j, {}).empty());
    auto j4 = cactus(4);
    EXPECT_EQ(downward_closure(j4, names(j4, {"[1,2]"})), names(j4, {"[1,2]"}));
}

TEST(DownwardClosure, AlwaysParabolic) {
    std::mt19937 rng(3);
    for (auto& f : fixtures::valid_fixtures()) {
        if (f.graph.size() > 40) continue;
        std::bernoulli_distribution coin(0.3);
        for (int t = 0; t < 20; ++t) {
            VertexSet x;
            for (auto v : f.graph.vertices())
                if (coin(rng)) x.push_back(v);
            EXPECT_TRUE(is_parabolic(f.graph, downward_closure(f.graph, x))) << f.name;
        }
    }
}

TEST(Member, Examples) {
    auto j = fixtures::j3();
    ParabolicSubgraph p(j, names(j, {"b", "c"}));
    EXPECT_TRUE(member(from_string(j, "b c"), p));
    EXPECT_FALSE(member(from_string(j, "a"), p));
    EXPECT_EQ(nf_string(from_string(j, "a b a")), "c");
    EXPECT_TRUE(member(from_string(j, "a b a"), p));
    EXPECT_THROW(ParabolicSubgraph(j, names(j, {"a", "b"})), std::invalid_argument);
}

TEST(Intersect, Examples) {
    auto j = fixtures::j3();
    ParabolicSubgraph bc(j, names(j, {"b", "c"})), all(j, j.vertices()), b(j, names(j, {"b"})),
        c(j, names(j, {"c"}));
    EXPECT_EQ(intersect(bc, all).vertices(), bc.vertices());
    EXPECT_EQ(intersect(bc, b).vertices(), b.vertices());
    auto none = intersect(b, c);
    EXPECT_TRUE(none.vertices().empty());
    EXPECT_TRUE(member(identity(j), none));
    EXPECT_FALSE(member(from_string(j, "b"), none));
    auto other = fixtures::j3();
    EXPECT_THROW(intersect(bc, ParabolicSubgraph(other, other.vertices())), std::invalid_argument);
}

TEST(Parabolic, ConservativeNormalForms) {
    auto j4 = cactus(4);
    std::mt19937 rng(17);
    for (auto& x : random_parabolic_sets(j4, rng, 10)) {
        ParabolicSubgraph p(j4, x);
        for (int t = 0; t < 100; ++t) {
            auto w = random_word(j4, x, rng, 1 + t % 9);
            auto in_parent = from_string(j4, w);
            auto in_sub = from_string(p.induced(), w);
            EXPECT_EQ(nf_string(in_parent), nf_string(in_sub)) << w;
            EXPECT_TRUE(member(in_parent, p));
        }
    }
}

TEST(Parabolic, IntersectionMembership) {
    auto j4 = cactus(4);
    std::mt19937 rng(23);
    auto sets = random_parabolic_sets(j4, rng, 10);
    std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
    // Words over the union of the two sets hit both sides of the equivalence.
    for (int t = 0; t < 1000; ++t) {
        ParabolicSubgraph a(j4, sets[pick(rng)]), b(j4, sets[pick(rng)]);
        VertexSet pool = a.vertices();
        if (t % 2) pool = b.vertices();
        if (t % 3 == 0) pool = j4.vertices();
        auto g = from_string(j4, random_word(j4, pool, rng, 1 + t % 7));
        EXPECT_EQ(member(g, a) && member(g, b), member(g, intersect(a, b)));
    }
}
