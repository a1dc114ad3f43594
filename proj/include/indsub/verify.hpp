#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "counting.hpp"
#include "enumerator.hpp"
#include "graph_io.hpp"
#include "modular.hpp"
#include "random.hpp"
#include "reductions.hpp"
#include "sylow.hpp"
#include "sylow_search.hpp"

namespace indsub {

struct Property {
    std::string name;
    bool pass = true;
    std::size_t checks = 0;
    json detail = json::object();
    std::vector<json> counterexamples;

    void check(bool ok, const std::function<json()>& what)
    {
        ++checks;
        if (ok) return;
        pass = false;
        if (counterexamples.size() < 5) counterexamples.push_back(what());
    }
};

struct SuiteReport {
    std::string suite;
    std::deque<Property> properties;
    double seconds = 0;

    bool pass() const
    {
        for (const auto& p : properties)
            if (!p.pass) return false;
        return true;
    }
    const Property& property(const std::string& name) const
    {
        for (const auto& p : properties)
            if (p.name == name) return p;
        throw PreconditionError("no property " + name);
    }
    json to_json() const
    {
        json props = json::array();
        for (const auto& p : properties) {
            json j = {{"property", p.name}, {"pass", p.pass}, {"checks", p.checks}};
            if (!p.detail.empty()) j["detail"] = p.detail;
            if (!p.counterexamples.empty()) j["counterexamples"] = p.counterexamples;
            props.push_back(j);
        }
        return {{"suite", suite}, {"pass", pass()}, {"properties", props}};
    }
};

namespace detail {

inline Property& add(SuiteReport& r, const std::string& name)
{
    r.properties.push_back({});
    r.properties.back().name = name;
    return r.properties.back();
}

inline std::string edge_key(const Graph& g)
{
    std::string s;
    for (auto [u, v] : g.edges()) s += std::to_string(u) + "-" + std::to_string(v) + " ";
    return s;
}

inline Perm random_perm(Rng& rng, int n)
{
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    shuffle_in_place(rng, p);
    return p;
}

// G with classes of 1..max_class vertices per vertex of H, each allowed pair
// present with probability 1/2.
inline HColoring random_colored_host(Rng& rng, const Graph& h, int max_class)
{
    HColoring c;
    c.pattern = h;
    for (int x = 0; x < h.n(); ++x) {
        int size = draw(rng, 1, max_class);
        for (int i = 0; i < size; ++i) c.map.push_back(x);
    }
    c.host = Graph(int(c.map.size()));
    for (int u = 0; u < c.host.n(); ++u)
        for (int v = u + 1; v < c.host.n(); ++v)
            if (h.adjacent(c.map[u], c.map[v]) && rng() % 2) c.host.add_edge(u, v);
    return c;
}

inline json graph_json(const Graph& g) { return write_graph6(g); }

// Sum of Phi(G)(-1)^{#E} over every labeled graph on 8 vertices, by class
// with weight 8!/#Aut.
inline Rational labeled_sweep_8(const GraphParameter& phi)
{
    static const auto classes = enumerate_canonical_graphs(8);
    static const auto weights = [] {
        std::vector<Integer> w;
        for (const auto& c : classes) w.push_back(factorial(8) / automorphism_count(c.graph));
        return w;
    }();
    Rational total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        total += sign(classes[i].graph.edge_count()) * phi(classes[i].graph) * Rational(weights[i]);
    return total;
}

} // namespace detail

// ---- graph-core ----
inline SuiteReport suite_graph_core(std::uint64_t seed)
{
    SuiteReport r{"graph-core", {}};
    Rng rng(seed);
    auto& es = detail::add(r, "edge-subgraph-extremes");
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, draw(rng, 0, 8));
        es.check(edge_subgraph(g, g.edges()) == g && edge_subgraph(g, {}).edge_count() == 0,
                 [&] { return detail::graph_json(g); });
    }
    auto& ci = detail::add(r, "canonical-invariance");
    for (int n = 1; n <= 6; ++n)
        for (int i = 0; i < 10; ++i) {
            Graph g = random_graph(rng, n);
            auto key = canonical_key(g);
            for (int j = 0; j < 10; ++j) {
                Graph h = relabel(g, detail::random_perm(rng, n));
                ci.check(canonical_key(h) == key, [&] { return json{detail::graph_json(g), detail::graph_json(h)}; });
            }
        }
    auto& ib = detail::add(r, "inhabited-biclique");
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            ib.check(isomorphic(inhabited_graph(complete_graph(2), {independent_set(a), independent_set(b)}),
                                complete_bipartite(a, b)),
                     [&] { return json{a, b}; });
    auto& lp = detail::add(r, "lexicographic-size");
    for (int i = 0; i < 20; ++i) {
        std::vector<Graph> f;
        int prod = 1;
        for (int j = draw(rng, 1, 3); j > 0; --j) {
            f.push_back(random_graph(rng, draw(rng, 1, 3)));
            prod *= f.back().n();
        }
        lp.check(lexicographic_product(f).n() == prod, [&] { return json(prod); });
    }
    auto& dt = detail::add(r, "difference-graph-transitive");
    for (int q : {2, 3, 5, 7}) {
        auto half = positive_half(q);
        for (std::uint32_t s = 0; s < (1u << half.size()); ++s) {
            std::vector<int> a;
            for (std::size_t i = 0; i < half.size(); ++i)
                if (s >> i & 1) a.push_back(half[i]);
            Graph g = difference_graph(q, a);
            std::set<int> reach{0};
            for_each_automorphism(g, [&](const std::vector<int>& p) { reach.insert(p[0]); });
            dt.check(int(reach.size()) == q, [&] { return json{{"q", q}, {"A", a}}; });
        }
    }
    return r;
}

// ---- parameters ----
inline SuiteReport suite_parameters(std::uint64_t seed)
{
    SuiteReport r{"parameters", {}};
    Rng rng(seed);
    auto params = builtin_parameters();
    params.push_back(table_parameter("table:demo", 4, {{canonical_key(path_graph(4)), 3}, {canonical_key(cycle_graph(4)), -1}}));

    auto& iso = detail::add(r, "isomorphism-invariance");
    for (const auto& phi : params)
        for (int k = 1; k <= 5; ++k)
            for (int i = 0; i < 3; ++i) {
                Graph g = random_graph(rng, k);
                Rational v = phi.raw(g);
                for (int j = 0; j < 20; ++j) {
                    Graph h = relabel(g, detail::random_perm(rng, k));
                    iso.check(phi.raw(h) == v, [&] { return json{phi.name(), detail::graph_json(g), detail::graph_json(h)}; });
                }
            }
    auto& dec = detail::add(r, "indicator-decomposition");
    for (const auto& phi : params)
        for (int k = 1; k <= 4; ++k) {
            auto parts = indicator_decomposition(phi, k);
            for (Mask m : small_table(k).rep) {
                Graph g = from_mask(k, m);
                Rational s = 0;
                for (const auto& [b, ind] : parts) s += b * ind(g);
                dec.check(s == phi(g), [&] { return json{phi.name(), detail::graph_json(g)}; });
            }
        }
    auto& rt = detail::add(r, "normalize-roundtrip");
    {
        // values in {-1,0,1}
        GraphParameter signed_phi("signed-demo", [](const Graph& g) -> Rational {
            int c = component_count(g);
            return Rational(c == 1 ? 1 : c == 2 ? 0 : -1);
        });
        auto norm = normalize_codomain(signed_phi, {-1, 0, 1});
        for (int i = 0; i < 20; ++i) {
            Graph g = random_graph(rng, draw(rng, 1, 7));
            int k = draw(rng, 1, 3);
            Rational direct = count_indsub(signed_phi, k, g);
            Rational back = norm.recover(k, g.n(), count_indsub(norm.phi, k, g));
            rt.check(back == direct, [&] { return json{detail::graph_json(g), k, str(direct), str(back)}; });
        }
    }
    auto& mono = detail::add(r, "monotone-extremes");
    for (const auto& phi : params) {
        if (phi.declared_edge_monotone() != true) continue;
        for (int k = 1; k <= 5; ++k) {
            mono.check(is_edge_monotone_on(phi, k), [&] { return json{phi.name(), k, "not monotone"}; });
            if (is_nontrivial_on(phi, k))
                mono.check(phi(independent_set(k)) > phi(complete_graph(k)), [&] { return json{phi.name(), k}; });
        }
    }
    return r;
}

// ---- chi-comp ----
inline SuiteReport suite_chi_comp(std::uint64_t)
{
    SuiteReport r{"chi-comp", {}};
    std::vector<GraphParameter> params;
    for (const auto& phi : builtin_parameters()) params.push_back(phi);

    auto& top = detail::add(r, "fixed-point-congruence");
    json rows = json::array();
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        const int n = int(ipow(p, m));
        auto lat = orbit_partition(sylow_generators(p, m), complete_graph(n));
        for (const auto& phi : params) {
            long fixed = alternating_enumerator_mod_p(phi, lat, p);
            json row = {{"p", p}, {"m", m}, {"phi", phi.name()}, {"fixed", fixed}};
            if (n <= 7) {
                long exact = mod_p(alternating_enumerator(phi, complete_graph(n)), p);
                row["exact"] = exact;
                top.check(exact == fixed, [&] { return row; });
            } else if (n == 8) {
                long exact = mod_p(detail::labeled_sweep_8(phi), p);
                row["exact"] = exact;
                top.check(exact == fixed, [&] { return row; });
            }
            rows.push_back(row);
        }
    }
    top.detail["rows"] = rows;

    // every prime p <= n, Sylow p-subgroup of Sym(n)
    auto& sub = detail::add(r, "sub-lattice-hosts");
    for (int n = 2; n <= 6; ++n)
        for (int p : {2, 3, 5}) {
            if (p > n) continue;
            auto lat = orbit_partition(sylow_subgroup_of_sym(n, p), complete_graph(n));
            for (const auto& phi : params) {
                long exact = mod_p(alternating_enumerator(phi, complete_graph(n)), p);
                long fixed = alternating_enumerator_mod_p(phi, lat, p);
                sub.check(exact == fixed, [&] { return json{{"n", n}, {"p", p}, {"phi", phi.name()}}; });
            }
        }

    auto& hosts = detail::add(r, "pattern-hosts");
    struct Host {
        Graph g;
        std::vector<int> primes;
    };
    std::vector<Host> list = {{complete_graph(2), {2}},         {complete_graph(3), {2, 3}},
                              {complete_graph(4), {2, 3}},      {complete_bipartite(2, 2), {2}},
                              {cycle_graph(5), {5}},            {complete_graph(5), {5}}};
    for (const auto& h : list)
        for (int p : h.primes) {
            // a p-subgroup of Aut(H): Sylow of Sym(n) intersected with Aut(H) by filtering its elements
            auto sym = sylow_subgroup_of_sym(h.g.n(), p);
            PermutationGroup grp{h.g.n(), {}};
            for (const auto& e : sym.elements())
                if (is_automorphism(h.g, e)) grp.generators.push_back(e);
            auto lat = orbit_partition(grp, h.g);
            for (const auto& phi : params) {
                long exact = mod_p(alternating_enumerator(phi, h.g), p);
                long fixed = alternating_enumerator_mod_p(phi, lat, p);
                hosts.check(exact == fixed,
                            [&] { return json{{"H", detail::graph_json(h.g)}, {"p", p}, {"phi", phi.name()}}; });
            }
        }

    auto& sl = detail::add(r, "sign-level-law");
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        auto lat = orbit_partition(sylow_generators(p, m), complete_graph(int(ipow(p, m))));
        for (auto fp : lat.fixed_points()) {
            int e = lat.point(fp).edge_count(), l = FixedPointLattice::level(fp);
            sl.check(mod_p(Rational(sign(e)), p) == mod_p(Rational(sign(l)), p), [&] { return json{p, m, fp}; });
        }
    }
    return r;
}

// ---- sylow ----
inline SuiteReport suite_sylow(std::uint64_t)
{
    SuiteReport r{"sylow", {}};
    const std::map<std::pair<int, int>, int> listed = {{{3, 1}, 2}, {{2, 2}, 4}, {{5, 1}, 4}, {{2, 3}, 8}, {{3, 2}, 16}};
    auto& agree = detail::add(r, "lattice-agreement");
    auto& counts = detail::add(r, "listed-counts");
    auto& levels = detail::add(r, "level-consistency");
    auto& inherit = detail::add(r, "fixed-points-inherit-group");
    json observed = json::object();
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        const int n = int(ipow(p, m));
        auto grp = sylow_generators(p, m);
        auto lat = orbit_partition(grp, complete_graph(n));
        std::set<std::string> from_orbits, from_products;
        for (auto fp : lat.fixed_points()) {
            Graph g = lat.point(fp);
            from_orbits.insert(detail::edge_key(g));
            for (const auto& gen : grp.generators)
                inherit.check(is_automorphism(g, gen), [&] { return json{p, m, fp}; });
        }
        for (const auto& f : sylow_points(p, m)) {
            Graph g = f.graph();
            from_products.insert(detail::edge_key(g));
            levels.check(orbit_level(lat, g) == f.level(), [&] { return json{p, m, f.str()}; });
        }
        agree.check(from_orbits == from_products && from_products.size() == (std::size_t(1) << (m * positive_half(p).size())),
                    [&] { return json{{"p", p}, {"m", m}, {"orbits", from_orbits.size()}, {"products", from_products.size()}}; });
        std::string key = std::to_string(p) + "," + std::to_string(m);
        observed[key] = from_orbits.size();
        if (auto it = listed.find({p, m}); it != listed.end())
            counts.check(int(from_orbits.size()) == it->second,
                         [&] { return json{{"p", p}, {"m", m}, {"expected", it->second}, {"observed", from_orbits.size()}}; });
    }
    counts.detail["observed"] = observed;

    auto& bic = detail::add(r, "prefix-zero-biclique");
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        const int side = int(ipow(p, m - 1));
        for (const auto& f : sylow_points(p, m))
            if (f.empty_prefix() == 0)
                bic.check(contains_biclique(f.graph(), side, side), [&] { return json{p, m, f.str()}; });
    }
    return r;
}

// ---- subbasis ----
inline SuiteReport suite_subbasis(std::uint64_t)
{
    SuiteReport r{"subbasis", {}};
    auto& alpha = detail::add(r, "alpha-equals-signed-chi");
    auto& recon = detail::add(r, "sub-basis-reconstruction");
    for (const auto& phi : builtin_parameters())
        for (int k = 1; k <= 4; ++k) {
            auto d = subbasis_coefficients(phi, k);
            for (std::size_t i = 0; i < d.graphs.size(); ++i) {
                const Graph& h = d.graphs[i].graph;
                alpha.check(d.alpha[i] == sign(h.edge_count()) * alternating_enumerator(phi, h),
                            [&] { return json{phi.name(), d.graphs[i].key}; });
            }
            for (const auto& g : d.graphs) {
                Rational s = 0;
                for (std::size_t i = 0; i < d.graphs.size(); ++i)
                    if (d.alpha[i] != 0) s += d.alpha[i] * Rational(count_sub(d.graphs[i].graph, g.graph));
                recon.check(s == phi(g.graph), [&] { return json{phi.name(), g.key, str(s), str(phi(g.graph))}; });
            }
        }
    return r;
}

// ---- indsub-expansion ----
inline SuiteReport suite_indsub_expansion(std::uint64_t seed)
{
    SuiteReport r{"indsub-expansion", {}};
    Rng rng(seed);
    auto params = builtin_parameters();
    auto& exp = detail::add(r, "indsub-sub-expansion");
    std::map<std::pair<std::string, int>, std::vector<Rational>> alpha;
    for (const auto& phi : params)
        for (int k = 1; k <= 4; ++k)
            for (Mask m : small_table(k).rep) {
                Graph h = from_mask(k, m);
                alpha[{phi.name(), k}].push_back(sign(h.edge_count()) * alternating_enumerator(phi, h));
            }
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, draw(rng, 1, 8));
        for (int k = 1; k <= 4; ++k) {
            std::vector<Integer> subs;
            for (Mask m : small_table(k).rep) subs.push_back(count_sub(from_mask(k, m), g));
            for (const auto& phi : params) {
                const auto& a = alpha[{phi.name(), k}];
                Rational s = 0;
                for (std::size_t c = 0; c < a.size(); ++c) s += a[c] * Rational(subs[c]);
                Rational direct = count_indsub(phi, k, g);
                exp.check(s == direct, [&] { return json{phi.name(), k, detail::graph_json(g), str(direct), str(s)}; });
            }
        }
    }
    auto ham = parse_parameter("hamiltonian-path-count");
    auto& hp = detail::add(r, "hamiltonian-indsub-is-path-sub");
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng, draw(rng, 1, 8));
        for (int k = 1; k <= 5; ++k) {
            hp.check(count_indsub(ham, k, g) == Rational(count_sub(path_graph(k), g)), [&] { return json{k, detail::graph_json(g)}; });
        }
    }
    // summed over the spanning paths P of H
    auto& hc = detail::add(r, "hamiltonian-cp-expansion");
    for (int k = 1; k <= 4; ++k)
        for (Mask m : small_table(k).rep) {
            Graph h = from_mask(k, m);
            std::vector<Graph> paths;
            for (Mask s = 0; s < (Mask(1) << slot_count(k)); ++s)
                if ((s & ~m) == 0 && std::popcount(s) == k - 1 && hamiltonian_path_count(from_mask(k, s)) == 1)
                    paths.push_back(from_mask(k, s));
            for (int i = 0; i < 3; ++i) {
                auto c = detail::random_colored_host(rng, h, 2);
                Integer s = 0;
                for (const auto& p : paths) s += count_cphom(c, p);
                hc.check(count_cp_indsub(ham, c) == Rational(s), [&] { return json{detail::graph_json(h), detail::graph_json(c.host)}; });
            }
        }
    auto& fast = detail::add(r, "fast-sub-matches-brute-force");
    std::vector<Graph> pats;
    for (int k = 1; k <= 5; ++k)
        for (Mask m : small_table(k).rep) {
            Graph h = from_mask(k, m);
            if (vertex_cover_number(h) <= 2) pats.push_back(h);
        }
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, draw(rng, 1, 10));
        for (const auto& h : pats)
            fast.check(count_sub_fast(h, g) == count_sub(h, g), [&] { return json{detail::graph_json(h), detail::graph_json(g)}; });
    }
    auto& hom = detail::add(r, "clique-hom-is-k-factorial-sub");
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(rng, draw(rng, 1, 8));
        for (int k = 1; k <= 4; ++k)
            hom.check(count_hom(complete_graph(k), g) == factorial(k) * count_sub(complete_graph(k), g),
                      [&] { return json{k, detail::graph_json(g)}; });
    }
    return r;
}

// ---- fpt ----
inline SuiteReport suite_fpt(std::uint64_t seed)
{
    SuiteReport r{"fpt", {}};
    Rng rng(seed);
    auto& eq = detail::add(r, "fpt-equals-direct");
    std::vector<std::pair<GraphParameter, int>> cases;
    for (int c = 0; c <= 3; ++c) cases.push_back({parse_parameter("edge-power:" + std::to_string(c)), c});
    cases.push_back({parse_parameter("universal-vertex-count"), 1});
    for (const auto& [phi, tau] : cases)
        for (int k = 1; k <= 5; ++k)
            for (int i = 0; i < 4; ++i) {
                Graph g = random_graph(rng, draw(rng, 1, 10));
                Rational a = fpt_indsub(phi, k, g, tau), b = count_indsub(phi, k, g);
                eq.check(a == b, [&] { return json{phi.name(), k, detail::graph_json(g), str(a), str(b)}; });
            }
    auto& van = detail::add(r, "edge-power-vanishing");
    for (int c = 0; c <= 3; ++c) {
        auto phi = parse_parameter("edge-power:" + std::to_string(c));
        for (int k = 1; k <= 5; ++k)
            for (Mask m : small_table(k).rep) {
                Graph h = from_mask(k, m);
                if (h.edge_count() > c)
                    van.check(alternating_enumerator(phi, h) == 0, [&] { return json{c, detail::graph_json(h)}; });
            }
    }
    auto& star = detail::add(r, "universal-vertex-support-is-star");
    auto uv = parse_parameter("universal-vertex-count");
    for (int k = 1; k <= 5; ++k)
        for (Mask m : small_table(k).rep) {
            Graph h = from_mask(k, m);
            star.check((alternating_enumerator(uv, h) != 0) == isomorphic(h, star_graph(k)),
                       [&] { return json{detail::graph_json(h)}; });
        }
    return r;
}

// ---- hom-expansion ----
inline SuiteReport suite_hom_expansion(std::uint64_t seed)
{
    SuiteReport r{"hom-expansion", {}};
    Rng rng(seed);
    auto& p = detail::add(r, "cp-indsub-hom-expansion");
    for (const char* name : {"connected", "edge-count", "component-count"}) {
        auto phi = parse_parameter(name);
        for (int k = 1; k <= 4; ++k)
            for (Mask m : small_table(k).rep) {
                Graph h = from_mask(k, m);
                for (int i = 0; i < 10; ++i) {
                    auto c = detail::random_colored_host(rng, h, 3);
                    auto rep = verify_cpindsub_hom_expansion(phi, c);
                    p.check(rep.equal, [&] {
                        return json{name, detail::graph_json(h), detail::graph_json(c.host), str(rep.lhs), str(rep.rhs)};
                    });
                }
            }
    }
    return r;
}

// ---- pipeline ----
inline SuiteReport suite_pipeline(std::uint64_t seed)
{
    SuiteReport r{"pipeline", {}};
    Rng rng(seed);
    auto phi = parse_parameter("disconnected");
    auto& eq = detail::add(r, "clique-count-end-to-end");
    auto& size = detail::add(r, "query-size-contract");
    json max_seen = json::object();
    for (int l : {2, 3}) {
        Graph f = complete_bipartite(l, l);
        int worst = 0;
        for (int i = 0; i < 20; ++i) {
            Graph g = random_graph(rng, draw(rng, 1, 6));
            auto res = count_cliques_via_indsub(l, phi, f, g);
            Integer direct = count_cliques(g, l);
            eq.check(res.cliques == direct,
                     [&] { return json{l, detail::graph_json(g), str(res.cliques), str(direct)}; });
            size.check(res.max_query <= 2 * l * g.n() + f.n(),
                       [&] { return json{l, detail::graph_json(g), res.max_query}; });
            worst = std::max(worst, res.max_query);
        }
        max_seen[std::to_string(l)] = worst;
    }
    size.detail["max_query"] = max_seen;
    return r;
}

// ---- lift ----
inline SuiteReport suite_lift(std::uint64_t seed)
{
    SuiteReport r{"lift", {}};
    Rng rng(seed);
    auto params = builtin_parameters();
    auto& id = detail::add(r, "lift-identity");
    for (int i = 0; i < 10; ++i) {
        const auto& phi = params[rng() % params.size()];
        LiftSpec spec;
        int s = draw(rng, 1, 3);
        spec.C = random_graph(rng, s);
        for (int j = 1; j < s; ++j) spec.parts.push_back(random_graph(rng, draw(rng, 1, 2)));
        Graph h = random_graph(rng, draw(rng, 1, std::min(4, 7 - spec.padding())));
        auto c = detail::random_colored_host(rng, h, 2);
        auto res = checked_lift_instance(phi, c, spec);
        id.check(res.equal, [&] {
            return json{phi.name(), spec.str(), detail::graph_json(h), detail::graph_json(c.host), str(res.lifted),
                        str(res.expanded)};
        });
    }
    return r;
}

// Edge-monotone {0,1} table parameter on k-vertex graphs: 1 exactly on the
// spanning subgraphs of some generator.
inline GraphParameter random_monotone_table(Rng& rng, int k, const std::string& name)
{
    const auto& t = small_table(k);
    const std::size_t complete = t.id[(Mask(1) << slot_count(k)) - 1];
    std::vector<char> one(t.classes(), 0);
    int gens = draw(rng, 1, 3);
    for (int i = 0; i < gens; ++i) {
        std::size_t c;
        do c = rng() % t.classes();
        while (c == complete);
        for (Mask s = t.rep[c];; s = (s - 1) & t.rep[c]) {
            one[t.id[s]] = 1;
            if (!s) break;
        }
    }
    std::map<std::string, Rational> vals;
    for (std::size_t c = 0; c < t.classes(); ++c)
        if (one[c]) vals[graph6_mask(k, t.rep[c])] = 1;
    return table_parameter(name, k, vals);
}

// ---- dichotomy ----
inline SuiteReport suite_dichotomy(std::uint64_t seed)
{
    SuiteReport r{"dichotomy", {}};
    Rng rng(seed);
    auto& p = detail::add(r, "never-neither");
    std::map<std::string, int> labels;
    for (int i = 0; i < 50; ++i) {
        auto phi = random_monotone_table(rng, 6, "monotone-table-" + std::to_string(i));
        std::string label;
        try {
            label = classify_concentrated_reducible(phi, 6, 2, 1).label;
        } catch (const InvariantError& e) {
            label = "neither";
        }
        ++labels[label];
        p.check(label != "neither" && label != "trivial", [&] { return json{phi.name(), label}; });
    }
    p.detail["labels"] = labels;
    return r;
}

// ---- modular ----
inline SuiteReport suite_modular(std::uint64_t seed)
{
    SuiteReport r{"modular", {}};
    Rng rng(seed);
    auto phi = parse_parameter("disconnected");
    auto& pipe = detail::add(r, "mod-p-pipeline");
    auto& num = detail::add(r, "numclique-from-modclique");
    auto& shared = detail::add(r, "mod-p-matches-exact-pipeline");
    json patterns = json::object();
    std::vector<Graph> graphs;
    for (int i = 0; i < 20; ++i) graphs.push_back(random_graph(rng, draw(rng, 1, 7)));
    for (long p : {2L, 3L, 5L}) {
        auto f = find_biclique_host(phi, 2, p);
        ensure(f.has_value(), "no nonvanishing pattern mod " + std::to_string(p));
        patterns[std::to_string(p)] = f->key;
        for (const auto& g : graphs) {
            long direct = mod_p(count_cliques(g, 2), p);
            long via = mod_p_clique_via_indsub(2, phi, f->graph, g, p);
            pipe.check(via == direct, [&] { return json{p, detail::graph_json(g), via, direct}; });
            long exact = mod_p(count_cliques_via_indsub(2, phi, f->graph, g).cliques, p);
            shared.check(via == exact, [&] { return json{p, detail::graph_json(g), via, exact}; });
            for (int l : {2, 3}) {
                long x = numclique_from_modclique(g, l, clique_mod_oracle(l, p));
                long d = mod_p(count_cliques(g, l), p);
                num.check(x == d, [&] { return json{p, l, detail::graph_json(g), x, d}; });
            }
        }
    }
    pipe.detail["patterns"] = patterns;
    return r;
}

// ---- parsimony ----
inline SuiteReport suite_parsimony(std::uint64_t seed)
{
    SuiteReport r{"parsimony", {}};
    Rng rng(seed);
    auto& cl = detail::add(r, "clique-count-equals-sat");
    auto& col = detail::add(r, "valid-colorings-equal-sat");
    for (int i = 0; i < 20; ++i) {
        int n = draw(rng, 3, 6), m = draw(rng, 1, 5);
        int k = std::min(draw(rng, 1, 2), m);
        Cnf3 f = random_cnf(rng, n, m);
        auto gd = sat_to_coloring_graph(f);
        Integer sat = count_sat(f);
        auto census = coloring_to_clique_graph(gd, k);
        Integer cliques = count_cliques(census.graph, 2 * k + 1);
        json cnf = f.clauses;
        cl.check(cliques == sat, [&] { return json{{"cnf", cnf}, {"n", n}, {"k", k}, {"cliques", str(cliques)}, {"sat", str(sat)}}; });
        col.check(count_valid_proper_colorings(gd) == sat, [&] { return json{{"cnf", cnf}, {"n", n}}; });
    }
    auto& one = detail::add(r, "single-clause-seven");
    Cnf3 single{3, {{1, 2, 3}}};
    auto gd = sat_to_coloring_graph(single);
    one.check(gd.valid.size() == 7, [] { return json("table size"); });
    one.check(count_valid_proper_colorings(gd) == 7, [] { return json("colorings"); });
    one.check(count_cliques(coloring_to_clique_graph(gd, 1).graph, 3) == 7, [] { return json("cliques"); });
    return r;
}

// ---- spot ----
inline SuiteReport suite_spot(std::uint64_t)
{
    SuiteReport r{"spot", {}};
    auto& a = detail::add(r, "instance-size-12");
    auto inst = clique_to_cphom_instance(2, complete_bipartite(2, 2), complete_graph(3));
    a.check(inst.host.n() == 12, [&] { return json(inst.host.n()); });
    a.check(count_cphom(inst) == 3, [&] { return json(str(count_cphom(inst))); });
    auto& b = detail::add(r, "component-count-k2-odd");
    long res = mod_p(alternating_enumerator(parse_parameter("component-count"), complete_graph(2)), 2);
    b.check(res == 1, [&] { return json(res); });
    auto& c = detail::add(r, "difference-graph-5-full");
    c.check(difference_graph(5, {1, 2}) == complete_graph(5), [] { return json("Delta_5{1,2}"); });
    return r;
}

inline const std::vector<std::pair<std::string, std::function<SuiteReport(std::uint64_t)>>>& suites()
{
    static const std::vector<std::pair<std::string, std::function<SuiteReport(std::uint64_t)>>> all = {
        {"graph-core", suite_graph_core}, {"parameters", suite_parameters},
        {"chi-comp", suite_chi_comp},     {"sylow", suite_sylow},
        {"subbasis", suite_subbasis},     {"indsub-expansion", suite_indsub_expansion},
        {"fpt", suite_fpt},               {"hom-expansion", suite_hom_expansion},
        {"pipeline", suite_pipeline},     {"lift", suite_lift},
        {"dichotomy", suite_dichotomy},   {"modular", suite_modular},
        {"parsimony", suite_parsimony},   {"spot", suite_spot},
    };
    return all;
}

inline SuiteReport run_suite(const std::string& id, std::uint64_t seed)
{
    for (const auto& [name, fn] : suites())
        if (name == id) {
            auto t0 = std::chrono::steady_clock::now();
            SuiteReport r = fn(seed);
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return r;
        }
    throw PreconditionError("unknown suite '" + id + "'");
}

} // namespace indsub
