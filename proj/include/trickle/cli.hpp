#pragma once

// Command-line front end. run() parses argv, writes the answer to `out` and
// diagnostics to `err`, and returns the exit code:
//   0 success, 1 negative answer (not equal, not a member, confluence failure),
//   2 usage, input or validation error.

#include <CLI11.hpp>

#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "confluence.hpp"
#include "element.hpp"
#include "families.hpp"
#include "garside.hpp"
#include "io.hpp"
#include "parabolic.hpp"
#include "thompson.hpp"
#include "tits.hpp"
#include "validate.hpp"
#include "vcactus.hpp"

namespace trickle::cli {

namespace detail {

inline std::string join_names(const FiniteGraph& g, const VertexSet& s, const char* sep = ",") {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : sep) + g.name(v);
    return out;
}

inline std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream in(csv);
    for (std::string tok; std::getline(in, tok, ',');)
        if (!tok.empty()) out.push_back(tok);
    return out;
}

// Loads the graph, applies --order-override, and reports the ranking on stderr.
inline FiniteGraph load(const std::string& path, const std::string& order_override, std::ostream& err) {
    FiniteGraph g = load_graph(path);
    if (!order_override.empty()) {
        std::vector<FiniteGraph::vertex_type> asc;
        for (auto& n : split_csv(order_override)) asc.push_back(g.at(n));
        g.set_ranking(asc);
    }
    std::string r;
    for (auto v : g.ranking()) r += (r.empty() ? "" : " < ") + g.name(v);
    err << "# ranking: " << r << "\n";
    return g;
}

inline FiniteGraph example_graph(const std::string& family, int n, const std::string& base_path) {
    if (family == "cactus") return cactus(n);
    if (family == "cstar") return dual_cactus_s3();
    if (family == "gar3") return gar3();
    if (family != "raag" && family != "racg" && family != "gp")
        throw std::invalid_argument("unknown family '" + family + "'");
    if (base_path.empty()) {
        if (family == "gp") throw std::invalid_argument("example gp needs --graph with a base graph");
        return graph_product_on(static_cast<std::size_t>(n), false,
                                family == "raag" ? Mu::infinite() : Mu::finite(2));
    }
    // Base graph: vertices and edges from the file; order and phi are dropped.
    auto base = load_graph(base_path);
    std::vector<std::string> ids;
    std::vector<Mu> mus;
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto v : base.vertices()) {
        ids.push_back(base.name(v));
        mus.push_back(family == "raag" ? Mu::infinite() : family == "racg" ? Mu::finite(2) : base.mu(v));
        for (auto w : base.vertices())
            if (v < w && base.edge(v, w)) edges.emplace_back(base.name(v), base.name(w));
    }
    return graph_product(ids, mus, edges);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Normal forms and word problems for trickle groups", "trickle"};
    app.require_subcommand(1);

    std::string graph_path, w1, w2, order_override, vertices, atoms, side = "left", family, base_path;
    int n = 3;
    std::size_t max_support = 3, samples = 100;
    int max_exp = 2;
    bool search = false;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "graph JSON file")->required();
        sub->add_option("--order-override", order_override, "ascending vertex ranking, comma separated");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check the trickle graph axioms");
    validate_cmd->add_option("graph", graph_path, "graph JSON file")->required();

    auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
    add_graph(nf_cmd);
    nf_cmd->add_option("word", w1)->required();

    auto* eq_cmd = app.add_subcommand("eq", "decide whether two words are equal");
    add_graph(eq_cmd);
    eq_cmd->add_option("word1", w1)->required();
    eq_cmd->add_option("word2", w2)->required();

    auto* order_cmd = app.add_subcommand("order", "finiteness and group order");
    order_cmd->add_option("graph", graph_path)->required();

    auto* member_cmd = app.add_subcommand("member", "membership in a standard parabolic subgroup");
    add_graph(member_cmd);
    member_cmd->add_option("word", w1)->required();
    member_cmd->add_option("--vertices", vertices, "parabolic vertex set, comma separated")->required();

    auto* tits_cmd = app.add_subcommand("tits-reduce", "syllabic normal form and syllabic length");
    add_graph(tits_cmd);
    tits_cmd->add_option("word", w1)->required();
    tits_cmd->add_flag("--search", search, "reduce by orbit search instead of the piling engine");

    auto* garside_cmd = app.add_subcommand("garside", "Garside structure of a graph with infinite labels");
    add_graph(garside_cmd);

    auto* div_cmd = app.add_subcommand("divisors", "atom divisors of a positive element");
    add_graph(div_cmd);
    div_cmd->add_option("word", w1)->required();
    div_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));

    auto* lcm_cmd = app.add_subcommand("lcm", "left lcm of a set of atoms");
    add_graph(lcm_cmd);
    lcm_cmd->add_option("--atoms", atoms, "comma separated atoms")->required();

    auto* conf_cmd = app.add_subcommand("confluence", "check critical pairs and random strategies");
    add_graph(conf_cmd);
    conf_cmd->add_option("--max-support", max_support)->check(CLI::Range(1, 6));
    conf_cmd->add_option("--max-exp", max_exp)->check(CLI::Range(1, 8));
    conf_cmd->add_option("--samples", samples, "random pilings for the strategy check");

    auto* ex_cmd = app.add_subcommand("example", "emit an example graph as JSON");
    ex_cmd->add_option("family", family)->required()->check(
        CLI::IsMember({"raag", "racg", "gp", "cactus", "cstar", "gar3"}));
    ex_cmd->add_option("--n", n)->check(CLI::Range(1, 12));
    ex_cmd->add_option("--graph", base_path, "base graph for raag, racg and gp");

    auto* vjn_cmd = app.add_subcommand("vjn", "virtual cactus group");
    vjn_cmd->require_subcommand(1);
    auto* vjn_eq = vjn_cmd->add_subcommand("eq", "decide equality in VJ_n");
    vjn_eq->add_option("--n", n)->required()->check(CLI::Range(2, 5));
    vjn_eq->add_option("word1", w1)->required();
    vjn_eq->add_option("word2", w2)->required();

    auto* f_cmd = app.add_subcommand("f", "Thompson's group F on dyadic vertices and inf");
    f_cmd->require_subcommand(1);
    auto* f_nf = f_cmd->add_subcommand("nf", "normal form");
    f_nf->add_option("word", w1)->required();
    auto* f_eq = f_cmd->add_subcommand("eq", "decide equality");
    f_eq->add_option("word1", w1)->required();
    f_eq->add_option("word2", w2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate_cmd) {
            auto g = load_graph(graph_path);
            auto r = validate(g);
            out << r << "\n";
            return r.valid() ? 0 : 2;
        }
        if (*order_cmd) {
            auto g = load_graph(graph_path);
            auto ans = is_finite(g);
            if (!ans.finite) out << "infinite (" << ans.reason << ")\n";
            else if (ans.order) out << "finite, order " << *ans.order << "\n";
            else out << "finite (" << ans.reason << ")\n";
            return 0;
        }
        if (*ex_cmd) {
            out << graph_to_json(detail::example_graph(family, n, base_path)).dump(2) << "\n";
            return 0;
        }
        if (*vjn_cmd) {
            VirtualCactus v(n);
            bool same = v.equal(w1, w2);
            out << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
        }
        if (*f_cmd) {
            FGraph f;
            if (*f_nf) {
                out << nf_string(from_string(f, w1)) << "\n";
                return 0;
            }
            bool same = equal(f, w1, w2);
            out << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
        }

        auto g = detail::load(graph_path, order_override, err);
        if (*nf_cmd) {
            out << nf_string(from_string(g, w1)) << "\n";
            return 0;
        }
        if (*eq_cmd) {
            bool same = equal(g, w1, w2);
            out << (same ? "equal" : "not equal") << "\n";
            return same ? 0 : 1;
        }
        if (*member_cmd) {
            ParabolicSubgraph p(g, parse_vertex_list(g, vertices));
            bool in = member(from_string(g, w1), p);
            out << (in ? "member" : "not member") << "\n";
            return in ? 0 : 1;
        }
        if (*tits_cmd) {
            auto w = parse_syllabic(g, w1);
            SyllabicWord<FiniteGraph::vertex_type> r;
            if (search) {
                auto found = tits_reduce(g, w);
                if (!found) {
                    err << "error: orbit bound exceeded\n";
                    return 2;
                }
                r = *found;
            } else {
                r = syllabic_reduce(g, w);
            }
            out << (r.empty() ? "()" : format_syllabic(g, r)) << "\n";
            out << "syllabic length " << r.size() << "\n";
            return 0;
        }
        if (*garside_cmd) {
            if (!is_pregarside_graph(g)) {
                out << "not preGarside (some label is finite)\n";
                return 0;
            }
            auto theta = theta_cube_check(g);
            out << "preGarside: yes\n";
            out << "theta-cube: " << theta << "\n";
            if (!is_garside(g)) {
                out << "Garside: no (graph is not complete)\n";
                return 0;
            }
            auto sf = square_free(g);
            std::vector<std::size_t> by_len(g.size() + 1, 0);
            for (auto& e : sf) ++by_len[nf(e).size()];
            out << "Garside: yes\n";
            out << "Delta: " << nf_string(garside_element(g)) << "\n";
            out << "square-free elements by length:";
            for (auto c : by_len) out << " " << c;
            out << "\n";
            return 0;
        }
        if (*div_cmd) {
            auto e = from_string(g, w1);
            auto d = side == "left" ? atom_left_divisors(e) : atom_right_divisors(e);
            out << "{" << detail::join_names(g, d, ", ") << "}\n";
            return 0;
        }
        if (*lcm_cmd) {
            auto l = lcm_atoms(g, parse_vertex_list(g, atoms));
            out << (l.is_identity() ? "()" : nf_string(l)) << "\n";
            return 0;
        }
        if (*conf_cmd) {
            auto r = check_critical_pairs(g, {max_support, max_exp});
            out << "critical pairs: C1 " << r.pairs[0] << ", C2 " << r.pairs[1] << ", C3 " << r.pairs[2] << "\n";
            out << "unresolved: " << r.failures << "\n";
            for (auto& w : r.witnesses) out << "  " << w << "\n";
            std::mt19937 rng(1);
            auto strata = enumerate_strata(g, max_support, max_exp);
            std::size_t bad = strata.empty() ? 0 : strategy_disagreements(g, strata, samples, 20, 6, rng);
            out << "random strategies: " << bad << " of " << (strata.empty() ? 0 : samples)
                << " pilings disagreed\n";
            return r.ok() && bad == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace trickle::cli
