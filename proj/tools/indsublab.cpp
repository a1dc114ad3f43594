// indsublab: command-line front end. JSON on stdout (or --out), exit codes
// 0 ok, 1 verification failures, 2 precondition, 3 invariant, 64 usage, 65 bad input.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "indsub/counting.hpp"
#include "indsub/enumerator.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/modular.hpp"
#include "indsub/reductions.hpp"
#include "indsub/sylow.hpp"
#include "indsub/sylow_search.hpp"
#include "indsub/verify.hpp"

using namespace indsub;

namespace {

struct Config {
    std::string phi = "connected", graph, coloring, cnf, pattern, spec, out;
    int k = 3, l = 2, p = 2, t = 1, tau = 3, q = 2;
    std::uint64_t seed = 7;
    std::vector<std::string> args;
};

const char* cache_dir() { return std::getenv("INDSUBLAB_CACHE_DIR"); }

GraphParameter load_phi(const std::string& spec)
{
    auto phi = parse_parameter(spec);
    if (auto dir = cache_dir()) phi.load_cache(dir);
    return phi;
}

void save_phi(const GraphParameter& phi)
{
    if (auto dir = cache_dir()) phi.save_cache(dir);
}

Graph need_graph(const Config& c)
{
    if (c.graph.empty()) throw PreconditionError("--graph is required");
    return load_graph(c.graph);
}

// {"pattern": <graph>, "map": [...], "host": <graph>} ; host falls back to --graph
HColoring load_coloring(const Config& c)
{
    if (c.coloring.empty()) throw PreconditionError("--coloring is required");
    json j = read_json_file(c.coloring);
    try {
        HColoring out;
        const auto& pat = j.at("pattern");
        out.pattern = pat.is_string() ? named_graph(pat.get<std::string>()) : graph_from_json(pat);
        out.map = j.at("map").get<std::vector<int>>();
        if (j.contains("host")) out.host = graph_from_json(j["host"]);
        else out.host = need_graph(c);
        validate(out);
        return out;
    } catch (const json::exception& e) {
        throw InputError(c.coloring + ": " + e.what());
    }
}

json run_ae(const Config& c)
{
    auto phi = load_phi(c.phi);
    Rational v = alternating_enumerator(phi, need_graph(c));
    save_phi(phi);
    return {{"value", str(v)}};
}

json run_ae_mod(const Config& c)
{
    require(is_prime(c.p), "--p must be prime");
    auto phi = load_phi(c.phi);
    Graph g = need_graph(c);
    // elements of a Sylow p-subgroup of Sym(n) that fix G
    PermutationGroup grp{g.n(), {}};
    for (const auto& e : sylow_subgroup_of_sym(g.n(), c.p).elements())
        if (is_automorphism(g, e)) grp.generators.push_back(e);
    auto lat = orbit_partition(grp, g);
    json out = {{"p", c.p}, {"orbits", lat.orbit_count()}, {"fixed_point_residue", alternating_enumerator_mod_p(phi, lat, c.p)}};
    if (g.edge_count() <= kEdgeSweepCap) out["exact_residue"] = mod_p(alternating_enumerator(phi, g), c.p);
    save_phi(phi);
    return out;
}

json run_subbasis(const Config& c)
{
    auto phi = load_phi(c.phi);
    auto d = subbasis_coefficients(phi, c.k);
    json rows = json::array();
    for (std::size_t i = 0; i < d.graphs.size(); ++i)
        rows.push_back({{"graph", d.graphs[i].key}, {"edges", d.graphs[i].graph.edge_count()}, {"alpha", str(d.alpha[i])}});
    save_phi(phi);
    return {{"phi", phi.name()}, {"k", c.k}, {"coefficients", rows}};
}

json run_fixed_points(const Config& c)
{
    if (c.args.size() != 2) throw PreconditionError("usage: fixed-points <p> <m>");
    int p = 0, m = 0;
    try {
        p = std::stoi(c.args[0]);
        m = std::stoi(c.args[1]);
    } catch (const std::exception&) {
        throw PreconditionError("fixed-points takes two integers");
    }
    json pts = json::array();
    for (const auto& f : sylow_lattice(p, m))
        pts.push_back({{"sets", f.str()}, {"level", f.level()}, {"graph", write_graph6(f.graph())},
                       {"edges", f.graph().edge_count()}});
    return {{"p", p}, {"m", m}, {"count", pts.size()}, {"points", pts}};
}

json run_count(const Config& c)
{
    const std::string what = c.args.empty() ? "indsub" : c.args[0];
    json out = {{"count", what}};
    if (what == "indsub" || what == "fpt") {
        auto phi = load_phi(c.phi);
        Graph g = need_graph(c);
        out["value"] = str(what == "fpt" ? fpt_indsub(phi, c.k, g, c.tau) : count_indsub(phi, c.k, g));
        save_phi(phi);
    } else if (what == "cp-indsub") {
        out["value"] = str(count_cp_indsub(load_phi(c.phi), load_coloring(c)));
    } else if (what == "cp-hom") {
        out["value"] = str(count_cphom(load_coloring(c)));
    } else if (what == "sub" || what == "hom") {
        if (c.pattern.empty()) throw PreconditionError("--pattern is required");
        Graph h = load_graph(c.pattern), g = need_graph(c);
        out["value"] = str(what == "hom" ? count_hom(h, g) : h.n() <= 6 ? count_sub(h, g) : count_sub_fast(h, g));
    } else if (what == "cliques") {
        out["value"] = str(count_cliques(need_graph(c), c.k));
    } else {
        throw PreconditionError("unknown count '" + what + "' (indsub, fpt, cp-indsub, cp-hom, sub, hom, cliques)");
    }
    return out;
}

json spec_json(const LiftSpec& s)
{
    json parts = json::array();
    for (const auto& h : s.parts) parts.push_back(write_graph6(h));
    return {{"C", write_graph6(s.C)}, {"parts", parts}};
}

json run_reduce(const Config& c)
{
    const std::string what = c.args.empty() ? "clique-via-indsub" : c.args[0];
    auto phi = load_phi(c.phi);
    json out = {{"reduce", what}, {"phi", phi.name()}};
    auto pattern = [&](long p) {
        if (!c.pattern.empty()) return load_graph(c.pattern);
        auto f = find_biclique_host(phi, c.l, p);
        require(f.has_value(), "no pattern with a K_{l,l} and nonvanishing enumerator up to 6 vertices");
        return f->graph;
    };
    if (what == "clique-via-indsub") {
        Graph f = pattern(0);
        auto r = count_cliques_via_indsub(c.l, phi, f, need_graph(c));
        out.update({{"pattern", write_graph6(f)}, {"cliques", str(r.cliques)}, {"oracle_calls", r.calls},
                    {"max_query_size", r.max_query}, {"instance_size", r.instance_size}});
    } else if (what == "mod-clique") {
        require(is_prime(c.p), "--p must be prime");
        Graph f = pattern(c.p);
        out.update({{"pattern", write_graph6(f)}, {"p", c.p},
                    {"residue", mod_p_clique_via_indsub(c.l, phi, f, need_graph(c), c.p)}});
    } else if (what == "classify") {
        auto r = classify_concentrated_reducible(phi, c.k, c.p, c.t);
        out["label"] = r.label;
        if (r.concentrated) out["concentrated_witness"] = r.concentrated->key;
        if (r.reducible) out["reducible_witness"] = spec_json(*r.reducible);
    } else if (what == "scatter") {
        auto s = scatter_membership(phi, [q = c.q](int) { return long(q); }, c.k);
        out["member"] = s.has_value();
        if (s) out["spec"] = spec_json(*s);
    } else {
        throw PreconditionError("unknown reduction '" + what + "' (clique-via-indsub, mod-clique, classify, scatter)");
    }
    save_phi(phi);
    return out;
}

// --spec file: {"C": <graph>, "parts": [<graph>, ...]}
json run_lift(const Config& c)
{
    if (c.spec.empty()) throw PreconditionError("--spec is required");
    json j = read_json_file(c.spec);
    LiftSpec spec;
    auto as_graph = [](const json& g) { return g.is_string() ? named_graph(g.get<std::string>()) : graph_from_json(g); };
    try {
        spec.C = as_graph(j.at("C"));
        for (const auto& h : j.at("parts")) spec.parts.push_back(as_graph(h));
    } catch (const json::exception& e) {
        throw InputError(c.spec + ": " + e.what());
    }
    auto phi = load_phi(c.phi);
    auto r = checked_lift_instance(phi, load_coloring(c), spec);
    return {{"lifted", str(r.lifted)}, {"expanded", str(r.expanded)}, {"equal", r.equal}, {"padding", spec.padding()}};
}

json run_gadget(const Config& c)
{
    if (!c.args.empty() && c.args[0] != "sat3") throw PreconditionError("only 'gadget sat3' exists");
    if (c.cnf.empty()) throw PreconditionError("--cnf is required");
    Cnf3 f = parse_dimacs(slurp(c.cnf));
    auto gd = sat_to_coloring_graph(f);
    auto census = coloring_to_clique_graph(gd, c.k);
    json groups = json::array();
    for (std::size_t i = 0; i < census.groups.size(); ++i)
        groups.push_back({{"gadget_vertices", census.groups[i].size()},
                          {"partial_colourings", std::count(census.group_of.begin(), census.group_of.end(), int(i))}});
    json table = json::object();
    for (const auto& [key, y] : gd.valid) {
        std::string lits, ys;
        for (int b = 2; b >= 0; --b) lits += colour_char(key >> b & 1);
        for (int x : y) ys += colour_char(x);
        table[lits] = ys;
    }
    return {{"G_phi", to_json(gd.graph)},
            {"roles", gd.roles},
            {"valid_table", table},
            {"clique_graph", to_json(census.graph)},
            {"census",
             {{"n", f.n},
              {"m", f.m()},
              {"k", c.k},
              {"G_phi_vertices", gd.graph.n()},
              {"clique_graph_vertices", census.graph.n()},
              {"groups", groups},
              {"cliques", str(count_cliques(census.graph, 2 * c.k + 1))},
              {"valid_proper_colorings", str(count_valid_proper_colorings(gd))},
              {"satisfying_assignments", str(count_sat(f))}}}};
}

json run_verify(const Config& c, bool& all_pass)
{
    const std::string which = c.args.empty() ? "all" : c.args[0];
    json reports = json::array();
    all_pass = true;
    for (const auto& [name, fn] : suites()) {
        if (which != "all" && which != name) continue;
        auto r = run_suite(name, c.seed);
        all_pass = all_pass && r.pass();
        reports.push_back(r.to_json());
    }
    if (reports.empty()) throw PreconditionError("unknown suite '" + which + "'");
    return {{"seed", c.seed}, {"pass", all_pass}, {"suites", reports}};
}

int fail(int code, const std::string& kind, const std::string& msg)
{
    std::cerr << json{{"error", kind}, {"message", msg}}.dump() << '\n';
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Alternating enumerators, induced subgraph counts and reductions"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");

    auto common = [&](CLI::App* s) {
        s->add_option("--phi", cfg.phi, "graph parameter (e.g. connected, edge-power:2, table:file.json)");
        s->add_option("--graph", cfg.graph, "graph file (JSON or graph6) or name (K3, C5, K2,3, ...)");
        s->add_option("--coloring", cfg.coloring, "coloured host JSON {pattern, map, host?}");
        s->add_option("--pattern", cfg.pattern, "pattern graph");
        s->add_option("--cnf", cfg.cnf, "DIMACS 3-CNF");
        s->add_option("--spec", cfg.spec, "lift spec JSON {C, parts}");
        s->add_option("--k", cfg.k);
        s->add_option("--l", cfg.l);
        s->add_option("--p", cfg.p);
        s->add_option("--t", cfg.t);
        s->add_option("--q", cfg.q, "q(k) for scatter");
        s->add_option("--tau", cfg.tau, "vertex cover bound for fpt");
        s->add_option("--seed", cfg.seed);
        s->add_option("--out", cfg.out);
        s->add_option("args", cfg.args);
    };
    std::map<std::string, CLI::App*> sub;
    for (const char* name : {"ae", "ae-mod", "subbasis", "fixed-points", "count", "reduce", "lift", "gadget", "verify"}) {
        sub[name] = app.add_subcommand(name);
        common(sub[name]);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(64, "usage", e.what());
    }

    try {
        json out;
        bool all_pass = true;
        if (sub["ae"]->parsed()) out = run_ae(cfg);
        else if (sub["ae-mod"]->parsed()) out = run_ae_mod(cfg);
        else if (sub["subbasis"]->parsed()) out = run_subbasis(cfg);
        else if (sub["fixed-points"]->parsed()) out = run_fixed_points(cfg);
        else if (sub["count"]->parsed()) out = run_count(cfg);
        else if (sub["reduce"]->parsed()) out = run_reduce(cfg);
        else if (sub["lift"]->parsed()) out = run_lift(cfg);
        else if (sub["gadget"]->parsed()) out = run_gadget(cfg);
        else if (sub["verify"]->parsed()) out = run_verify(cfg, all_pass);

        const std::string text = out.dump(2) + "\n";
        if (cfg.out.empty()) std::cout << text;
        else {
            std::ofstream f(cfg.out);
            if (!f) return fail(65, "input", "cannot write " + cfg.out);
            f << text;
        }
        return all_pass ? 0 : 1;
    } catch (const InputError& e) {
        return fail(65, "input", e.what());
    } catch (const PreconditionError& e) {
        return fail(2, "precondition", e.what());
    } catch (const InvariantError& e) {
        return fail(3, "invariant", e.what());
    }
}
