#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "enumerator.hpp"
#include "graph_algo.hpp"
#include "parameters.hpp"

namespace indsub {

// G presented as an H-colored graph: map[v] is the colour (a vertex of H).
struct HColoring {
    Graph host;
    Graph pattern;
    std::vector<int> map;

    std::vector<std::vector<int>> classes() const
    {
        std::vector<std::vector<int>> c(static_cast<std::size_t>(pattern.n()));
        for (int v = 0; v < host.n(); ++v) c[map[v]].push_back(v);
        return c;
    }
};

inline void validate(const HColoring& c)
{
    require(int(c.map.size()) == c.host.n(), "colouring must assign every host vertex");
    for (int x : c.map) require(x >= 0 && x < c.pattern.n(), "colour out of range");
    for (auto [u, v] : c.host.edges())
        require(c.map[u] != c.map[v] && c.pattern.adjacent(c.map[u], c.map[v]),
                "colouring is not a homomorphism at edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
}

inline HColoring identity_coloring(const Graph& h)
{
    std::vector<int> id(static_cast<std::size_t>(h.n()));
    std::iota(id.begin(), id.end(), 0);
    return {h, h, id};
}

constexpr int kIndSubHostCap = 64;

namespace detail {

// Walks every k-subset of a <= 64 vertex host, keeping the induced mask in
// column order, and tallies the isomorphism class of each.
inline std::vector<std::int64_t> induced_class_histogram(const Graph& g, int k)
{
    const int n = g.n();
    const auto& t = small_table(k);
    std::vector<std::int64_t> hist(t.classes(), 0);
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[v] = g.word(v);
    // col[d][w]: adjacency of w to the first d chosen vertices, bit i for the i-th
    std::vector<std::vector<std::uint8_t>> col(std::size_t(k), std::vector<std::uint8_t>(std::size_t(n), 0));
    std::function<void(int, int, Mask)> go = [&](int d, int start, Mask mask) {
        const int off = slot(0, d);
        if (d == k - 1) {
            const auto& c = col[d];
            for (int w = start; w < n; ++w) ++hist[t.id[mask | Mask(c[w]) << off]];
            return;
        }
        for (int v = start; v <= n - (k - d); ++v) {
            Mask next = mask | Mask(col[d][v]) << off;
            const std::uint64_t row = nb[v];
            auto& dst = col[d + 1];
            const auto& src = col[d];
            for (int w = v + 1; w < n; ++w) dst[w] = std::uint8_t(src[w] | ((row >> w & 1) << d));
            go(d + 1, v + 1, next);
        }
    };
    if (k <= n) go(0, 0, 0);
    return hist;
}

} // namespace detail

// Sum of Phi over the induced k-vertex subgraphs of G.
inline Rational count_indsub(const GraphParameter& phi, int k, const Graph& g)
{
    require(k >= 1, "k must be positive");
    require(g.n() <= kIndSubHostCap, "#IndSub hosts capped at 64 vertices");
    if (k > g.n()) return 0;
    Rational total = 0;
    if (k <= 7) {
        auto hist = detail::induced_class_histogram(g, k);
        const auto& val = phi.class_values(k);
        for (std::size_t c = 0; c < hist.size(); ++c)
            if (hist[c]) total += val[c] * Rational(hist[c]);
        return total;
    }
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<void(int, int)> go = [&](int d, int start) {
        if (d == k) {
            total += phi(induced_subgraph(g, pick));
            return;
        }
        for (int v = start; v <= g.n() - (k - d); ++v) {
            pick[d] = v;
            go(d + 1, v + 1);
        }
    };
    go(0, 0);
    return total;
}

// Sum of Phi over the colourful subsets (one vertex per colour class).
inline Rational count_cp_indsub(const GraphParameter& phi, const HColoring& c)
{
    validate(c);
    const int k = c.pattern.n();
    require(k >= 1 && k <= 7, "cp-IndSub patterns capped at 7 vertices");
    require(c.host.n() <= kIndSubHostCap, "cp-IndSub hosts capped at 64 vertices");
    auto cls = c.classes();
    for (const auto& x : cls)
        if (x.empty()) return 0;
    const auto& t = small_table(k);
    std::vector<std::int64_t> hist(t.classes(), 0);
    std::vector<int> chosen(static_cast<std::size_t>(k));
    std::function<void(int, Mask)> go = [&](int d, Mask mask) {
        if (d == k) {
            ++hist[t.id[mask]];
            return;
        }
        for (int v : cls[d]) {
            Mask add = 0;
            for (int i = 0; i < d; ++i)
                if (c.host.adjacent(chosen[i], v)) add |= Mask(1) << slot(i, d);
            chosen[d] = v;
            go(d + 1, mask | add);
        }
    };
    go(0, 0);
    const auto& val = phi.class_values(k);
    Rational total = 0;
    for (std::size_t i = 0; i < hist.size(); ++i)
        if (hist[i]) total += val[i] * Rational(hist[i]);
    return total;
}

namespace detail {

// Maps V(H) -> V(G) with each vertex drawn from cand[v], edges of H to edges
// of G, optionally injective.
inline Integer count_maps(const Graph& h, const Graph& g, const std::vector<std::vector<int>>& cand, bool injective)
{
    const int k = h.n();
    std::vector<int> img(std::size_t(k), -1);
    std::vector<char> used(std::size_t(g.n()), 0);
    std::uint64_t total = 0;
    std::function<void(int)> go = [&](int v) {
        if (v == k) {
            ++total;
            return;
        }
        for (int w : cand[v]) {
            if (injective && used[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (h.adjacent(u, v) && !g.adjacent(img[u], w)) ok = false;
            if (!ok) continue;
            img[v] = w;
            used[w] = 1;
            go(v + 1);
            used[w] = 0;
        }
    };
    go(0);
    return Integer((unsigned long)total);
}

} // namespace detail

inline Integer count_hom(const Graph& h, const Graph& g)
{
    require(h.n() <= 8, "homomorphism counts capped at 8 pattern vertices");
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    return detail::count_maps(h, g, std::vector<std::vector<int>>(std::size_t(h.n()), all), false);
}

// Colour-prescribed homomorphisms from `pattern` (H or an edge-subgraph of H
// on the same vertices) into the coloured host.
inline Integer count_cphom(const HColoring& c, const Graph& pattern)
{
    validate(c);
    require(pattern.n() == c.pattern.n(), "pattern must live on V(H)");
    require(pattern.n() <= 8, "cp-hom counts capped at 8 pattern vertices");
    for (auto [u, v] : pattern.edges()) require(c.pattern.adjacent(u, v), "pattern is not an edge-subgraph of H");
    return detail::count_maps(pattern, c.host, c.classes(), false);
}

inline Integer count_cphom(const HColoring& c) { return count_cphom(c, c.pattern); }

inline Integer count_injective_hom(const Graph& h, const Graph& g)
{
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    return detail::count_maps(h, g, std::vector<std::vector<int>>(std::size_t(h.n()), all), true);
}

// #Sub(H, G) = #Inj(H, G) / #Aut(H).
inline Integer count_sub(const Graph& h, const Graph& g)
{
    require(h.n() <= 6, "brute-force #Sub capped at 6 pattern vertices");
    if (h.n() > g.n()) return 0;
    return count_injective_hom(h, g) / automorphism_count(h);
}

namespace detail {

inline void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out)
{
    std::vector<std::vector<int>> cur;
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t b = 0; b < cur.size(); ++b) {
            cur[b].push_back(i);
            go(i + 1);
            cur[b].pop_back();
        }
        cur.push_back({i});
        go(i + 1);
        cur.pop_back();
    };
    go(0);
}

} // namespace detail

// #Sub via a minimum vertex cover C of H: place C injectively, then count
// injective placements of the independent rest by Mobius inversion over set
// partitions (mu = prod (-1)^{|B|-1}(|B|-1)!), and divide by #Aut(H).
inline Integer count_sub_fast(const Graph& h, const Graph& g)
{
    require(h.n() <= 8, "fast #Sub capped at 8 pattern vertices");
    require(g.n() <= 64, "fast #Sub hosts capped at 64 vertices");
    auto cover = min_vertex_cover(h);
    require(cover.size() <= 3, "fast #Sub needs a vertex cover of size at most 3");
    if (h.n() > g.n()) return 0;
    std::vector<int> rest;
    {
        std::vector<char> inc(std::size_t(h.n()), 0);
        for (int v : cover) inc[v] = 1;
        for (int v = 0; v < h.n(); ++v)
            if (!inc[v]) rest.push_back(v);
    }
    const int r = int(rest.size());
    std::vector<std::vector<std::vector<int>>> parts;
    detail::set_partitions(r, parts);
    std::vector<Integer> mu;
    for (const auto& p : parts) {
        Integer m = 1;
        for (const auto& b : p) m *= ((b.size() - 1) % 2 ? -1 : 1) * factorial(b.size() - 1);
        mu.push_back(m);
    }
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) nb[v] = g.word(v);
    const std::uint64_t all = g.n() == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n()) - 1;

    Integer inj = 0;
    std::vector<int> img(cover.size());
    std::vector<std::uint64_t> w(static_cast<std::size_t>(r));
    std::function<void(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t used) {
        if (i == cover.size()) {
            for (int j = 0; j < r; ++j) {
                std::uint64_t s = all & ~used;
                for (std::size_t c = 0; c < cover.size(); ++c)
                    if (h.adjacent(rest[j], cover[c])) s &= nb[img[c]];
                w[j] = s;
            }
            for (std::size_t pi = 0; pi < parts.size(); ++pi) {
                Integer prod = mu[pi];
                for (const auto& b : parts[pi]) {
                    std::uint64_t s = all;
                    for (int j : b) s &= w[j];
                    prod *= __builtin_popcountll(s);
                    if (prod == 0) break;
                }
                inj += prod;
            }
            return;
        }
        for (int x = 0; x < g.n(); ++x) {
            if (used >> x & 1) continue;
            bool ok = true;
            for (std::size_t c = 0; c < i && ok; ++c)
                if (h.adjacent(cover[i], cover[c]) && !(nb[x] >> img[c] & 1)) ok = false;
            if (!ok) continue;
            img[i] = x;
            go(i + 1, used | std::uint64_t(1) << x);
        }
    };
    go(0, 0);
    Integer aut = 0;
    for_each_automorphism(h, [&](const std::vector<int>&) { ++aut; });
    ensure(inj % aut == 0, "injective count not divisible by #Aut");
    return inj / aut;
}

// #IndSub(Phi,k)(G) = sum_H (-1)^{#E(H)} chi(Phi,H) #Sub(H,G), using only the
// terms with a vertex cover of size <= tau. Every other term must vanish.
inline Rational fpt_indsub(const GraphParameter& phi, int k, const Graph& g, int tau)
{
    require(k >= 1 && k <= 6, "fpt_indsub capped at k <= 6");
    require(tau >= 0 && tau <= 3, "fpt_indsub needs tau <= 3 for the vertex-cover #Sub path");
    const auto& t = small_table(k);
    Rational total = 0;
    for (std::size_t c = 0; c < t.classes(); ++c) {
        Graph h = from_mask(k, t.rep[c]);
        Rational chi = alternating_enumerator(phi, h);
        if (chi == 0) continue;
        if (vertex_cover_number(h) > tau)
            throw PreconditionError("chi(" + phi.name() + ", " + graph6_mask(k, t.rep[c]) +
                                    ") is nonzero but its vertex cover exceeds tau=" + std::to_string(tau));
        total += sign(t.edges[c]) * chi * Rational(count_sub_fast(h, g));
    }
    return total;
}

struct ExpansionTerm {
    std::vector<Edge> edges;  // A, as pattern edges
    Rational coefficient;     // (-1)^{|A|} chi(Phi, H{A})
    Integer cphom;
};

struct ExpansionReport {
    Rational lhs, rhs;
    bool equal = false;
    std::vector<ExpansionTerm> terms;
};

// #cpIndSub(Phi,H)(G) against sum_{A subset E(H)} (-1)^{|A|} chi(Phi,H{A}) #cpHom(H{A},G).
inline ExpansionReport verify_cpindsub_hom_expansion(const GraphParameter& phi, const HColoring& c)
{
    validate(c);
    const auto es = c.pattern.edges();
    require(es.size() <= 10, "hom expansion capped at 10 pattern edges");
    ExpansionReport r;
    r.lhs = count_cp_indsub(phi, c);
    for (std::uint32_t a = 0; a < (1u << es.size()); ++a) {
        ExpansionTerm term;
        for (std::size_t i = 0; i < es.size(); ++i)
            if (a >> i & 1) term.edges.push_back(es[i]);
        Graph ha = edge_subgraph(c.pattern, term.edges);
        term.coefficient = sign(int(term.edges.size())) * alternating_enumerator(phi, ha);
        term.cphom = term.coefficient == 0 ? Integer(0) : count_cphom(c, ha);
        r.rhs += term.coefficient * Rational(term.cphom);
        r.terms.push_back(std::move(term));
    }
    r.equal = r.lhs == r.rhs;
    return r;
}

struct CliqueClassTerm {
    std::string key;
    Integer labeled_copies;  // k!/#Aut(H)
    Rational chi;
    Integer cphom_sum;       // over every labeled copy of H inside K_k
    Integer cphom_canonical; // the canonically labeled copy only
};

struct CliqueExpansionReport {
    Rational lhs;
    Rational rhs;          // classes weighted by k!/#Aut(H) times the mean cp-hom count
    Rational rhs_literal;  // same weights, cp-hom of one canonical copy
    bool equal = false;
    bool literal_equal = false;
    std::vector<CliqueClassTerm> classes;
};

// With H = K_k the sum over A subset E(K_k) groups by the class of K_k{A};
// each class contributes k!/#Aut(H) labeled copies.
inline CliqueExpansionReport verify_clique_colored_expansion(const GraphParameter& phi, int k, const HColoring& c)
{
    require(k >= 1 && k <= 4, "clique expansion capped at k <= 4");
    require(c.pattern == complete_graph(k), "host must be coloured by K_k");
    validate(c);
    CliqueExpansionReport r;
    r.lhs = count_cp_indsub(phi, c);
    const auto& t = small_table(k);
    std::map<int, CliqueClassTerm> by;
    for (Mask a = 0; a < (Mask(1) << slot_count(k)); ++a) {
        int id = t.id[a];
        auto& term = by[id];
        Graph ha = from_mask(k, a);
        term.cphom_sum += count_cphom(c, ha);
        term.labeled_copies += 1;
        if (a == t.rep[id]) term.cphom_canonical = count_cphom(c, ha);
    }
    for (auto& [id, term] : by) {
        Graph h = from_mask(k, t.rep[id]);
        term.key = graph6_mask(k, t.rep[id]);
        term.chi = alternating_enumerator(phi, h);
        ensure(term.labeled_copies == factorial(static_cast<std::size_t>(k)) / automorphism_count(h),
               "labeled copy count differs from k!/#Aut");
        Rational w = sign(t.edges[id]) * Rational(term.labeled_copies) * term.chi;
        r.rhs += w * Rational(term.cphom_sum, term.labeled_copies);
        r.rhs_literal += w * Rational(term.cphom_canonical);
        r.classes.push_back(term);
    }
    r.equal = r.lhs == r.rhs;
    r.literal_equal = r.lhs == r.rhs_literal;
    return r;
}

} // namespace indsub
