#pragma once

// Shared test fixtures, including one corrupted graph per axiom.

#include <string>
#include <vector>

#include <trickle/families.hpp>
#include <trickle/io.hpp>
#include <trickle/vcactus.hpp>

namespace fixtures {

using trickle::FiniteGraph;
using trickle::GraphSpec;
using trickle::Mu;

inline std::string data_path(const std::string& file) { return std::string(TRICKLE_TEST_DATA) + "/" + file; }
inline FiniteGraph load(const std::string& file) { return trickle::load_graph(data_path(file)); }

// J3 with a = [1,3], b = [1,2], c = [2,3].
inline FiniteGraph j3() { return load("j3.json"); }

struct Named {
    std::string name;
    FiniteGraph graph;
};

// Every fixture the axiom suite must accept.
inline std::vector<Named> valid_fixtures() {
    std::vector<Named> out;
    for (int n = 2; n <= 5; ++n) out.push_back({"cactus(" + std::to_string(n) + ")", trickle::cactus(n)});
    out.push_back({"J3 (a,b,c)", j3()});
    out.push_back({"GAR3", trickle::gar3()});
    out.push_back({"CSTAR", trickle::dual_cactus_s3()});
    for (std::size_t n = 1; n <= 6; ++n) {
        out.push_back({"RAAG path " + std::to_string(n), trickle::raag_path(n)});
        out.push_back({"RACG path " + std::to_string(n), trickle::racg_path(n)});
    }
    for (std::size_t n = 3; n <= 6; ++n) {
        out.push_back({"RAAG cycle " + std::to_string(n), trickle::raag_cycle(n)});
        out.push_back({"RACG cycle " + std::to_string(n), trickle::racg_cycle(n)});
    }
    for (int n = 2; n <= 4; ++n) out.push_back({"KJ" + std::to_string(n), trickle::kjn_graph(n)});
    return out;
}

// Chain z_i < y < x with phi_y = (z1 z2) and phi_x = (z2 z3), which do not commute.
inline FiniteGraph corrupted_g() {
    GraphSpec s;
    for (auto v : {"x", "y", "z1", "z2", "z3"}) s.add_vertex(v, Mu::infinite());
    s.less = {{"y", "x"}, {"z1", "y"}, {"z2", "y"}, {"z3", "y"}};
    s.edges = {{"x", "y"}, {"x", "z1"}, {"x", "z2"}, {"x", "z3"}, {"y", "z1"}, {"y", "z2"}, {"y", "z3"}};
    s.phi["y"] = {{"z1", "z2"}, {"z2", "z1"}};
    s.phi["x"] = {{"z2", "z3"}, {"z3", "z2"}};
    return FiniteGraph(s);
}


// Exactly one axiom fails in each of these; `witness` is the expected witness.
struct Corrupted {
    std::string axiom;
    FiniteGraph graph;
    std::vector<std::string> witness;
};

inline std::vector<Corrupted> corrupted_fixtures() {
    std::vector<Corrupted> out;
    {  // (a): GAR3 without the order edge {y,x}; phi_x left as identity.
        GraphSpec s;
        for (auto v : {"x", "y", "z"}) s.add_vertex(v, Mu::infinite());
        s.less = {{"y", "x"}, {"z", "x"}};
        s.edges = {{"x", "z"}, {"y", "z"}};
        out.push_back({"a", FiniteGraph(s), {"y", "x"}});
    }
    {  // (b): x || y adjacent, z < y, but {x,z} missing.
        GraphSpec s;
        for (auto v : {"x", "y", "z"}) s.add_vertex(v, Mu::infinite());
        s.less = {{"z", "y"}};
        s.edges = {{"x", "y"}, {"y", "z"}};
        out.push_back({"b", FiniteGraph(s), {"x", "y", "z"}});
    }
    {  // (c): phi_x swaps y and z although w < y and w is not below z.
        GraphSpec s;
        for (auto v : {"x", "y", "z", "w"}) s.add_vertex(v, Mu::infinite());
        s.less = {{"y", "x"}, {"z", "x"}, {"w", "y"}};
        s.edges = {{"x", "y"}, {"x", "z"}, {"x", "w"}, {"w", "y"}, {"w", "z"}};
        s.phi["x"] = {{"y", "z"}, {"z", "y"}};
        out.push_back({"c", FiniteGraph(s), {"x", "y", "w"}});
    }
    {  // (d): phi_x moves y although y is not below x.
        GraphSpec s;
        for (auto v : {"x", "y", "z"}) s.add_vertex(v, Mu::infinite());
        s.edges = {{"x", "y"}, {"x", "z"}, {"y", "z"}};
        s.phi["x"] = {{"y", "z"}, {"z", "y"}};
        out.push_back({"d", FiniteGraph(s), {"x", "y"}});
    }
    {  // (e): GAR3 with mu(x) = 3 while phi_x has order 2.
        GraphSpec s;
        s.add_vertex("x", Mu::finite(3));
        s.add_vertex("y", Mu::infinite());
        s.add_vertex("z", Mu::infinite());
        s.less = {{"y", "x"}, {"z", "x"}};
        s.edges = {{"x", "y"}, {"x", "z"}, {"y", "z"}};
        s.phi["x"] = {{"y", "z"}, {"z", "y"}};
        out.push_back({"e", FiniteGraph(s), {"x"}});
    }
    {  // (f): GAR3 with mu(y) = 2, mu(z) = 3.
        GraphSpec s;
        s.add_vertex("x", Mu::infinite());
        s.add_vertex("y", Mu::finite(2));
        s.add_vertex("z", Mu::finite(3));
        s.less = {{"y", "x"}, {"z", "x"}};
        s.edges = {{"x", "y"}, {"x", "z"}, {"y", "z"}};
        s.phi["x"] = {{"y", "z"}, {"z", "y"}};
        out.push_back({"f", FiniteGraph(s), {"x", "y"}});
    }
    out.push_back({"g", corrupted_g(), {"x", "y", "z1"}});
    return out;
}

}  // namespace fixtures
