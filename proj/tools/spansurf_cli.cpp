// Command-line front end: generate the library's constructions, inspect
// and classify hosts, run the surface searches and the paper-verification
// suite. Reports are JSON lines by default; --human switches to prose.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "spansurf/colouring.hpp"
#include "spansurf/constructions.hpp"
#include "spansurf/io.hpp"
#include "spansurf/match_partition.hpp"
#include "spansurf/search.hpp"
#include "spansurf/surface.hpp"
#include "spansurf/tight.hpp"
#include "spansurf/verify.hpp"

using nlohmann::json;
using namespace spansurf;

namespace {

constexpr const char* kVersion = "spansurf 1.0";

struct Global {
    std::optional<uint64_t> seed;
    uint64_t budget_nodes = 10'000'000;
    double budget_secs = 60.0;
    int workers = 1;
    bool human = false;
    bool json_out = true;  // default output mode; --human overrides
};

ThreeGraph load_three_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    return read_three_graph(in);
}

void emit(const Global& g, const json& j, const std::string& human_text) {
    if (g.human)
        std::cout << human_text << "\n";
    else
        std::cout << j.dump() << "\n";
}

json triples_json(const std::vector<Triple>& ts) {
    json a = json::array();
    for (const auto& t : ts) a.push_back({t[0], t[1], t[2]});
    return a;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Found: return "found";
        case Verdict::NoneCertified: return "none-certified";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Found: return 0;
        case Verdict::NoneCertified: return 1;
        case Verdict::Indeterminate: return 3;
    }
    return 3;
}

std::optional<SurfaceType> parse_target(const std::string& s) {
    if (s == "any") return std::nullopt;
    if (s == "sphere") return SurfaceType::sphere();
    if (s == "torus") return SurfaceType::torus();
    if (s == "projective") return SurfaceType::projective_plane();
    if (s.rfind("genus:", 0) == 0)
        return SurfaceType::make(2 - 2 * std::stoi(s.substr(6)), true);
    if (s.rfind("cross:", 0) == 0)
        return SurfaceType::make(2 - std::stoi(s.substr(6)), false);
    throw std::invalid_argument("unknown --target " + s);
}

Triple parse_triple(const std::string& s) {
    int a, b, c;
    char c1, c2;
    std::istringstream is(s);
    if (!(is >> a >> c1 >> b >> c2 >> c) || c1 != ',' || c2 != ',')
        throw std::invalid_argument("expected a triple a,b,c, got " + s);
    return make_triple(a, b, c);
}

int cmd_generate(const Global& g, const std::string& name, int n, int chi, int k, int r,
                 int c, const std::string& out_path) {
    std::vector<std::string> header = {std::string(kVersion), "generator: " + name};
    std::ostringstream params;
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    auto dump3 = [&](const ThreeGraph& h, const std::string& p) {
        header.push_back("params: " + p);
        write_three_graph(out, h, header);
    };
    if (name == "tripartite") dump3(tripartite_extremal(n), "n=" + std::to_string(n));
    else if (name == "parity")
        dump3(parity_extremal(n, chi),
              "n=" + std::to_string(n) + " chi=" + std::to_string(chi));
    else if (name == "two-component") dump3(two_component_extremal(n), "n=" + std::to_string(n));
    else if (name == "single-tight")
        dump3(single_tight_counterexample(n), "n=" + std::to_string(n));
    else if (name == "complete") dump3(complete_three_graph(n), "n=" + std::to_string(n));
    else if (name == "t9") {
        header.push_back("params: none");
        write_complex(out, torus_t9(), header);
    } else if (name == "p12") {
        header.push_back("params: none");
        write_complex(out, projective_p12(), header);
    } else if (name == "double-pyramid") {
        header.push_back("params: c=" + std::to_string(c));
        write_complex(out, double_pyramid(c), header);
    } else if (name == "double-ladder") {
        header.push_back("params: k=" + std::to_string(k));
        write_graph(out, double_ladder(k), header);
    } else if (name == "r-partite-mod") {
        header.push_back("params: n=" + std::to_string(n) + " r=" + std::to_string(r));
        auto sets = r_partite_mod(n, r);
        for (const auto& hc : header) out << "# " << hc << "\n";
        out << n << " " << sets.size() << "\n";
        for (const auto& s : sets) {
            for (size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
            out << "\n";
        }
    } else {
        std::cerr << "unknown generator: " << name << "\n";
        return 2;
    }
    emit(g, json{{"written", out_path}, {"generator", name}},
         "wrote " + out_path + " (" + name + ")");
    return 0;
}

int cmd_check(const Global& g, const std::string& path) {
    ThreeGraph h = load_three_graph(path);
    auto part = tight_components(h);
    json comps = json::array();
    for (const auto& c : part.components)
        comps.push_back({{"edges", c.edge_indices.size()}, {"span", c.vertices.size()}});
    // degeneracy = 3-partiteness = proper 3-colourability of the pair skeleton
    std::vector<int> colour(h.vertex_count(), -1);
    std::vector<std::vector<int>> adj(h.vertex_count());
    for (const auto& t : h.edges()) {
        adj[t[0]].push_back(t[1]);
        adj[t[1]].push_back(t[0]);
        adj[t[0]].push_back(t[2]);
        adj[t[2]].push_back(t[0]);
        adj[t[1]].push_back(t[2]);
        adj[t[2]].push_back(t[1]);
    }
    uint64_t steps = 0;
    bool exhausted = false;
    std::function<bool(int)> colour_from = [&](int v) -> bool {
        if (v == h.vertex_count()) return true;
        if (++steps > 5'000'000) {
            exhausted = true;
            return false;
        }
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int u : adj[v])
                if (colour[u] == c) ok = false;
            if (!ok) continue;
            colour[v] = c;
            if (colour_from(v + 1)) return true;
            colour[v] = -1;
        }
        return false;
    };
    bool degenerate = colour_from(0);
    int delta2 = h.vertex_count() >= 2 ? h.min_codegree() : 0;
    json j{{"n", h.vertex_count()},
           {"m", h.edge_count()},
           {"delta2", delta2},
           {"components", comps},
           // null when the colouring search hit its step budget undecided
           {"degenerate", !degenerate && exhausted ? json(nullptr) : json(degenerate)}};
    std::ostringstream hs;
    hs << "n=" << h.vertex_count() << " m=" << h.edge_count() << " delta2=" << delta2
       << " components=" << part.components.size() << " degenerate="
       << (degenerate ? "yes" : (exhausted ? "unknown" : "no"));
    emit(g, j, hs.str());
    return 0;
}

int cmd_classify(const Global& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    Complex k = read_complex(in);
    auto chk = is_closed_surface(k);
    json j{{"closed", chk.closed}};
    std::ostringstream hs;
    if (chk.closed) {
        SurfaceType t = classify(k);
        j["euler"] = t.euler;
        j["orientable"] = t.orientable;
        j["name"] = t.name();
        j["witness"] = nullptr;
        hs << t.display_name() << " (chi=" << t.euler << ", "
           << (t.orientable ? "orientable" : "non-orientable") << ")";
    } else {
        j["euler"] = euler_characteristic(k);
        j["orientable"] = nullptr;
        j["name"] = nullptr;
        j["witness"] = chk.describe();
        hs << "not a closed surface: " << chk.describe();
    }
    emit(g, j, hs.str());
    return 0;
}

int cmd_search(const Global& g, const std::string& path, const std::string& target_str) {
    ThreeGraph h = load_three_graph(path);
    auto target = parse_target(target_str);
    SearchBudget b{g.budget_nodes, g.budget_secs};
    SearchOutcome res = find_spanning_surface(h, target, b, g.workers);
    json j{{"verdict", verdict_name(res.verdict)},
           {"witness", res.witness ? triples_json(res.witness->facets()) : json(nullptr)},
           {"nodes", res.nodes},
           {"secs", res.secs},
           {"seed", g.seed ? json(*g.seed) : json(nullptr)}};
    std::ostringstream hs;
    hs << verdict_name(res.verdict);
    if (res.witness) hs << " (" << res.witness->facet_count() << " facets)";
    hs << " after " << res.nodes << " nodes";
    emit(g, j, hs.str());
    return verdict_exit(res.verdict);
}

int cmd_colour(const Global& g, const std::string& path, uint64_t threshold,
               const std::string& out_path) {
    ThreeGraph h = load_three_graph(path);
    MergeResult mr = merge_colouring(h, threshold);
    std::vector<std::string> header = {std::string(kVersion),
                                       "merge-threshold: " + std::to_string(threshold)};
    for (const auto& ev : mr.log)
        header.push_back("merged: " + std::to_string(ev.colour_a) + "+" +
                         std::to_string(ev.colour_b) + " cross=" +
                         std::to_string(ev.touching_count));
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
    }
    write_coloured(out, h, mr.colouring, header);
    emit(g,
         json{{"written", out_path},
              {"merges", mr.log.size()},
              {"final_colours", mr.final_colour_count}},
         "wrote " + out_path + " after " + std::to_string(mr.log.size()) + " merges");
    return 0;
}

int cmd_census(const Global& g, const std::string& path, const std::string& e_str,
               const std::string& f_str, int lmax) {
    ThreeGraph h = load_three_graph(path);
    SearchBudget b{g.budget_nodes, g.budget_secs};
    auto res = connectibility_census(h, parse_triple(e_str), parse_triple(f_str), lmax, b);
    json counts = json::array(), families = json::array(), bounds = json::array();
    for (size_t l = 0; l < res.counts.size(); ++l) {
        counts.push_back(res.counts[l]);
        bounds.push_back(static_cast<bool>(res.family_bound_ok[l]));
        json fam = json::array();
        for (const auto& a : res.families[l]) fam.push_back(a);
        families.push_back(fam);
    }
    json j{{"counts", counts},
           {"disjoint_families", families},
           {"family_bound_ok", bounds},
           {"exhaustive", res.exhaustive},
           {"nodes", res.nodes}};
    std::ostringstream hs;
    hs << "counts per l:";
    for (auto c : res.counts) hs << " " << c;
    hs << (res.exhaustive ? " (exhaustive)" : " (budget hit)");
    emit(g, j, hs.str());
    return 0;
}

int cmd_matchpart(const Global& g, const std::string& path, double eps) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path, 0);
    Graph graph = read_graph(in);
    auto mp = match_partition(graph, eps);
    auto pairs_json = [](const std::vector<Pair>& ps) {
        json a = json::array();
        for (const auto& p : ps) a.push_back({p[0], p[1]});
        return a;
    };
    json j{{"Z", mp.z},
           {"B", mp.b},
           {"C", mp.c},
           {"D", mp.d},
           {"matching_Z", pairs_json(mp.matching_z)},
           {"matching_CD", pairs_json(mp.matching_cd)},
           {"boundary_edges", mp.boundary_edge_count},
           {"rounds", mp.rounds}};
    std::ostringstream hs;
    hs << "|Z|=" << mp.z.size() << " |B|=" << mp.b.size() << " |C|=|D|=" << mp.c.size()
       << " boundary=" << mp.boundary_edge_count;
    emit(g, j, hs.str());
    return 0;
}

int cmd_verify(const Global& g) {
    auto results = run_acceptance(std::cout);
    if (!g.human) {
        for (const auto& r : results)
            std::cout << json{{"criterion", r.id},
                              {"name", r.name},
                              {"pass", r.pass},
                              {"informational", r.informational},
                              {"detail", r.detail},
                              {"secs", r.secs}}
                             .dump()
                      << "\n";
    }
    if (all_passed(results)) return 0;
    std::cerr << "failed criteria:";
    for (const auto& r : results)
        if (!r.pass) std::cerr << " " << r.id;
    std::cerr << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational experiments on spanning surfaces in 3-graphs"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();  // global flags may follow the subcommand
    Global g;
    app.add_option("--seed", g.seed, "seed for any randomized step");
    app.add_option("--budget-nodes", g.budget_nodes, "search node budget");
    app.add_option("--budget-secs", g.budget_secs, "search wall-clock budget");
    app.add_option("--workers", g.workers, "parallel search workers");
    app.add_flag("--human", g.human, "human-readable reports instead of JSON lines");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "force JSON-lines reports (the default)");

    std::string name, file, out_path = "out.3g", target = "sphere";
    std::string e_str, f_str;
    int n = 9, chi = 2, k = 1, r = 3, c = 4, lmax = 2;
    uint64_t threshold = 1;
    double eps = 0.1;

    auto* gen = app.add_subcommand("generate", "write a construction to a file");
    gen->add_option("name", name,
                    "tripartite|parity|two-component|single-tight|complete|t9|p12|"
                    "double-pyramid|double-ladder|r-partite-mod")
        ->required();
    gen->add_option("--n", n, "vertex count");
    gen->add_option("--chi", chi, "Euler characteristic parameter");
    gen->add_option("--k", k, "ladder parameter");
    gen->add_option("--r", r, "uniformity parameter");
    gen->add_option("--c", c, "cycle length");
    gen->add_option("-o,--out", out_path, "output path");

    auto* chk = app.add_subcommand("check", "codegree / component / degeneracy report");
    chk->add_option("file", file)->required();

    auto* cls = app.add_subcommand("classify", "closed-surface recognition and classification");
    cls->add_option("file", file)->required();

    auto* sea = app.add_subcommand("search", "spanning surface search");
    sea->add_option("file", file)->required();
    sea->add_option("--target", target, "sphere|torus|projective|genus:g|cross:k|any");

    auto* col = app.add_subcommand("colour", "tight-component colour merging, writes .3gc");
    col->add_option("file", file)->required();
    col->add_option("--threshold", threshold, "merge threshold (touching cross pairs)");
    col->add_option("-o,--out", out_path, "output path");

    auto* cen = app.add_subcommand("census", "connectibility census for two disjoint edges");
    cen->add_option("file", file)->required();
    cen->add_option("--e", e_str, "first edge a,b,c")->required();
    cen->add_option("--f", f_str, "second edge a,b,c")->required();
    cen->add_option("--lmax", lmax, "largest connector size (<= 6)");

    auto* mat = app.add_subcommand("matchpart", "Z/B/C/D partition of a graph");
    mat->add_option("file", file)->required();
    mat->add_option("--eps", eps, "eps parameter in (0,1]");

    app.add_subcommand("verify-paper", "run the full acceptance suite");

    app.require_subcommand(1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // documented usage-error exit code
    }
    if (json_flag) g.human = false;

    try {
        if (gen->parsed()) return cmd_generate(g, name, n, chi, k, r, c, out_path);
        if (chk->parsed()) return cmd_check(g, file);
        if (cls->parsed()) return cmd_classify(g, file);
        if (sea->parsed()) return cmd_search(g, file, target);
        if (col->parsed()) return cmd_colour(g, file, threshold, out_path);
        if (cen->parsed()) return cmd_census(g, file, e_str, f_str, lmax);
        if (mat->parsed()) return cmd_matchpart(g, file, eps);
        return cmd_verify(g);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const MatchPartitionError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
