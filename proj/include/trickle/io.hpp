#pragma once

// Graph files: JSON with fields vertices, less, edges, phi. Unknown fields are rejected.
//
//   {
//     "vertices": [{"id": "x", "mu": "inf"}, {"id": "y", "mu": 2}],
//     "less":     [["y", "x"]],
//     "edges":    [["x", "y"]],
//     "phi":      {"x": [["y", "y"]]}
//   }

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "graph.hpp"

namespace trickle {

class SchemaError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void only_keys(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw SchemaError(where + ": unknown field '" + it.key() + "'");
}

inline std::pair<std::string, std::string> id_pair(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw SchemaError(where + ": expected a pair of vertex ids");
    return {j[0].get<std::string>(), j[1].get<std::string>()};
}

}  // namespace detail

inline GraphSpec spec_from_json(const nlohmann::json& j) {
    detail::only_keys(j, {"vertices", "less", "edges", "phi"}, "graph");
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw SchemaError("graph: 'vertices' array required");
    GraphSpec spec;
    std::size_t i = 0;
    for (auto& v : j["vertices"]) {
        const std::string where = "vertices[" + std::to_string(i++) + "]";
        detail::only_keys(v, {"id", "mu"}, where);
        if (!v.contains("id") || !v["id"].is_string()) throw SchemaError(where + ": string 'id' required");
        if (!v.contains("mu")) throw SchemaError(where + ": 'mu' required");
        const auto& m = v["mu"];
        Mu mu;
        if (m.is_string() && m.get<std::string>() == "inf") mu = Mu::infinite();
        else if (m.is_number_integer()) {
            auto k = m.get<std::int64_t>();
            if (k < 2) throw SchemaError(where + ": mu must be >= 2 or \"inf\"");
            mu = Mu::finite(k);
        } else
            throw SchemaError(where + ": mu must be an integer >= 2 or \"inf\"");
        spec.add_vertex(v["id"].get<std::string>(), mu);
    }
    auto pairs = [&](const char* key, auto& dst) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) throw SchemaError(std::string("graph: '") + key + "' must be an array");
        std::size_t k = 0;
        for (auto& p : j[key]) dst.push_back(detail::id_pair(p, std::string(key) + "[" + std::to_string(k++) + "]"));
    };
    pairs("less", spec.less);
    pairs("edges", spec.edges);
    if (j.contains("phi")) {
        if (!j["phi"].is_object()) throw SchemaError("graph: 'phi' must be an object");
        for (auto it = j["phi"].begin(); it != j["phi"].end(); ++it) {
            if (!it.value().is_array()) throw SchemaError("phi." + it.key() + ": expected an array of pairs");
            auto& dst = spec.phi[it.key()];
            std::size_t k = 0;
            for (auto& p : it.value())
                dst.push_back(detail::id_pair(p, "phi." + it.key() + "[" + std::to_string(k++) + "]"));
        }
    }
    return spec;
}

inline FiniteGraph graph_from_json(const nlohmann::json& j) {
    auto spec = spec_from_json(j);
    try {
        return FiniteGraph(spec);
    } catch (const std::invalid_argument& e) {
        throw SchemaError(e.what());
    }
}

inline FiniteGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
    return graph_from_json(j);
}

// Vertices in construction order, the full (transitive) order, each edge once,
// and only the non-identity phi entries.
inline nlohmann::json graph_to_json(const FiniteGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (std::uint32_t v = 0; v < g.size(); ++v) {
        nlohmann::json e;
        e["id"] = g.name(v);
        if (g.mu(v).is_infinite()) e["mu"] = "inf";
        else e["mu"] = g.mu(v).value;
        j["vertices"].push_back(e);
    }
    j["less"] = nlohmann::json::array();
    j["edges"] = nlohmann::json::array();
    j["phi"] = nlohmann::json::object();
    for (std::uint32_t x = 0; x < g.size(); ++x)
        for (std::uint32_t y = 0; y < g.size(); ++y) {
            if (g.less(x, y)) j["less"].push_back({g.name(x), g.name(y)});
            if (x < y && g.edge(x, y)) j["edges"].push_back({g.name(x), g.name(y)});
            if (x != y && g.edge(x, y) && g.phi(x, y) != y) j["phi"][g.name(x)].push_back({g.name(y), g.name(g.phi(x, y))});
        }
    return j;
}

}  // namespace trickle
