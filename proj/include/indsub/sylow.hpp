#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_algo.hpp"
#include "numeric.hpp"

namespace indsub {

using Perm = std::vector<int>;

struct PermutationGroup {
    int degree = 0;
    std::vector<Perm> generators;

    // Explicit closure; fine for the orders used here (at most a few hundred).
    std::vector<Perm> elements(std::size_t limit = 1000000) const
    {
        Perm id(static_cast<std::size_t>(degree));
        std::iota(id.begin(), id.end(), 0);
        std::set<Perm> seen{id};
        std::vector<Perm> out{id};
        for (std::size_t i = 0; i < out.size(); ++i)
            for (const auto& g : generators) {
                Perm h(static_cast<std::size_t>(degree));
                for (int x = 0; x < degree; ++x) h[x] = g[out[i][x]];
                if (seen.insert(h).second) {
                    out.push_back(h);
                    if (out.size() > limit) throw PreconditionError("group order exceeds closure limit");
                }
            }
        return out;
    }

    Integer order() const { return Integer(elements().size()); }

    bool is_transitive() const
    {
        if (degree == 0) return true;
        std::vector<char> seen(std::size_t(degree), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& g : generators)
                if (!seen[g[x]]) {
                    seen[g[x]] = 1;
                    stack.push_back(g[x]);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
    }
};

inline bool is_automorphism(const Graph& h, const Perm& g)
{
    for (auto [u, v] : h.edges())
        if (!h.adjacent(g[u], g[v])) return false;
    return true;
}

// Orbits of E(H) under a group, and the fixed points as orbit-index sets.
struct FixedPointLattice {
    Graph host;
    PermutationGroup group;
    std::vector<Edge> edges;               // host edges, column order
    std::vector<int> orbit_of;             // edge index -> orbit
    std::vector<std::vector<int>> orbits;  // orbit -> edge indices

    int orbit_count() const { return int(orbits.size()); }

    // All 2^{#orbits} fixed points as orbit bitsets, in increasing order.
    std::vector<std::uint64_t> fixed_points() const
    {
        require(orbit_count() <= 20, "too many orbits to list every fixed point");
        std::vector<std::uint64_t> out(std::size_t(1) << orbit_count());
        std::iota(out.begin(), out.end(), std::uint64_t(0));
        return out;
    }

    Graph point(std::uint64_t orbit_set) const
    {
        Graph g(host.n());
        for (int o = 0; o < orbit_count(); ++o)
            if (orbit_set >> o & 1)
                for (int e : orbits[o]) g.add_edge(edges[e].first, edges[e].second);
        return g;
    }

    static int level(std::uint64_t orbit_set) { return __builtin_popcountll(orbit_set); }
};

inline FixedPointLattice orbit_partition(const PermutationGroup& grp, const Graph& h)
{
    require(grp.degree == h.n(), "group degree does not match the host");
    require(h.edge_count() <= 64, "orbit partition capped at 64 edges");
    for (const auto& g : grp.generators)
        if (!is_automorphism(h, g)) throw PreconditionError("a generator is not an automorphism of the host");
    FixedPointLattice lat;
    lat.host = h;
    lat.group = grp;
    lat.edges = h.edges();
    const int m = int(lat.edges.size());
    std::vector<int> idx(std::size_t(h.n()) * std::size_t(h.n()), -1);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = lat.edges[e];
        idx[std::size_t(u) * h.n() + v] = idx[std::size_t(v) * h.n() + u] = e;
    }
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& g : grp.generators)
        for (int e = 0; e < m; ++e) {
            auto [u, v] = lat.edges[e];
            int f = idx[std::size_t(g[u]) * h.n() + g[v]];
            parent[find(e)] = find(f);
        }
    lat.orbit_of.assign(std::size_t(m), -1);
    std::vector<int> root_to_orbit(std::size_t(m), -1);
    for (int e = 0; e < m; ++e) {
        int r = find(e);
        if (root_to_orbit[r] < 0) {
            root_to_orbit[r] = int(lat.orbits.size());
            lat.orbits.emplace_back();
        }
        lat.orbit_of[e] = root_to_orbit[r];
        lat.orbits[root_to_orbit[r]].push_back(e);
    }
    return lat;
}

// Vertex (x_1..x_m) of [0,p)^m has index sum x_i p^{m-i}; x_1 is the most
// significant digit, matching lexicographic_product.
inline std::vector<int> sylow_digits(int p, int m, int v)
{
    std::vector<int> x(static_cast<std::size_t>(m));
    for (int i = m - 1; i >= 0; --i) {
        x[i] = v % p;
        v /= p;
    }
    return x;
}

inline int sylow_index(int p, const std::vector<int>& x)
{
    int v = 0;
    for (int d : x) v = v * p + d;
    return v;
}

// One generator per (level j, prefix a in [0,p)^j): add 1 to x_{j+1} on the
// vertices whose first j coordinates equal a.
inline PermutationGroup sylow_generators(int p, int m)
{
    require(is_prime(p), "p must be prime");
    require(m >= 1, "m must be positive");
    const int n = int(ipow(p, m));
    require(n <= 9, "Sylow groups are capped at p^m <= 9");
    PermutationGroup grp;
    grp.degree = n;
    for (int j = 0; j < m; ++j) {
        const int prefixes = int(ipow(p, j));
        for (int a = 0; a < prefixes; ++a) {
            Perm g(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                auto x = sylow_digits(p, m, v);
                int pre = 0;
                for (int i = 0; i < j; ++i) pre = pre * p + x[i];
                if (pre == a) x[j] = (x[j] + 1) % p;
                g[v] = sylow_index(p, x);
            }
            grp.generators.push_back(g);
        }
    }
    const long expect_exp = (long(n) - 1) / (p - 1);
    Integer expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), (unsigned long)p, (unsigned long)expect_exp);
    ensure(grp.order() == expect, "Sylow group order mismatch for p=" + std::to_string(p) + " m=" + std::to_string(m));
    return grp;
}

// A Sylow p-subgroup of Sym(n): split n in base p and act on each block of
// size p^i by Syl_{p^i}. Blocks of size 1 are fixed.
inline PermutationGroup sylow_subgroup_of_sym(int n, int p)
{
    require(is_prime(p), "p must be prime");
    PermutationGroup grp;
    grp.degree = n;
    int offset = 0;
    std::vector<int> digits;
    for (int r = n; r > 0; r /= p) digits.push_back(r % p);
    for (int i = int(digits.size()) - 1; i >= 0; --i)
        for (int c = 0; c < digits[i]; ++c) {
            int size = int(ipow(p, i));
            if (i > 0) {
                auto local = sylow_generators(p, i);
                for (const auto& g : local.generators) {
                    Perm full(static_cast<std::size_t>(n));
                    std::iota(full.begin(), full.end(), 0);
                    for (int v = 0; v < size; ++v) full[offset + v] = offset + g[v];
                    grp.generators.push_back(full);
                }
            }
            offset += size;
        }
    return grp;
}

inline std::vector<int> positive_half(int p)
{
    std::vector<int> out;
    for (int x = 1; x <= (p == 2 ? 1 : (p - 1) / 2); ++x) out.push_back(x);
    return out;
}

struct SylowFixedPoint {
    int p = 2, m = 1;
    std::vector<std::vector<int>> sets;  // A_1..A_m, each a sorted subset of F_p^+

    Graph graph() const
    {
        std::vector<Graph> f;
        for (const auto& a : sets) f.push_back(difference_graph(p, a));
        return lexicographic_product(f);
    }

    int level() const
    {
        int l = 0;
        for (const auto& a : sets) l += int(a.size());
        return l;
    }

    int empty_prefix() const
    {
        for (int i = 0; i < m; ++i)
            if (!sets[i].empty()) return i;
        return m;
    }

    // Order key: each A_i as a bitmask over F_p^+, A_1 first.
    std::vector<int> code() const
    {
        std::vector<int> c;
        for (const auto& a : sets) {
            int b = 0;
            for (int x : a) b |= 1 << (x - 1);
            c.push_back(b);
        }
        return c;
    }

    std::string str() const
    {
        std::string s = "(";
        for (int i = 0; i < m; ++i) {
            if (i) s += ",";
            s += "{";
            for (std::size_t j = 0; j < sets[i].size(); ++j) s += (j ? "," : "") + std::to_string(sets[i][j]);
            s += "}";
        }
        return s + ")";
    }
};

inline std::vector<SylowFixedPoint> sylow_points(int p, int m)
{
    require(is_prime(p) && m >= 1 && ipow(p, m) <= 9, "Sylow lattices are capped at p^m <= 9");
    const auto half = positive_half(p);
    const int h = int(half.size());
    std::vector<SylowFixedPoint> out;
    const long total = 1L << (h * m);
    for (long code = 0; code < total; ++code) {
        SylowFixedPoint f;
        f.p = p;
        f.m = m;
        f.sets.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            long bits = code >> (h * (m - 1 - i)) & ((1L << h) - 1);
            for (int b = 0; b < h; ++b)
                if (bits >> b & 1) f.sets[i].push_back(half[b]);
        }
        out.push_back(f);
    }
    return out;
}

// The difference-graph products, checked against the orbit computation of
// the Sylow group on K_{p^m}.
inline std::vector<SylowFixedPoint> sylow_lattice(int p, int m)
{
    auto pts = sylow_points(p, m);
    auto lat = orbit_partition(sylow_generators(p, m), complete_graph(int(ipow(p, m))));
    std::set<std::vector<Edge>> from_orbits, from_products;
    for (auto fp : lat.fixed_points()) from_orbits.insert(lat.point(fp).edges());
    for (const auto& f : pts) from_products.insert(f.graph().edges());
    ensure(from_orbits == from_products, "Sylow fixed points differ from the difference-graph products");
    return pts;
}

// Level of a product point as an orbit count in the Sylow lattice.
inline int orbit_level(const FixedPointLattice& lat, const Graph& g)
{
    std::vector<char> has(std::size_t(lat.orbit_count()), 0), full(std::size_t(lat.orbit_count()), 1);
    for (std::size_t e = 0; e < lat.edges.size(); ++e) {
        bool in = g.adjacent(lat.edges[e].first, lat.edges[e].second);
        if (in) has[lat.orbit_of[e]] = 1;
        else full[lat.orbit_of[e]] = 0;
    }
    int l = 0;
    for (int o = 0; o < lat.orbit_count(); ++o) {
        if (has[o] && !full[o]) throw PreconditionError("graph is not a fixed point of the lattice");
        l += has[o];
    }
    return l;
}

struct Embedding {
    SylowFixedPoint source, target;
    std::vector<int> map;  // source vertex -> target vertex
};

// F = (empty^j, A_1..A_{m-j}) maps into (A_1..A_{m-j}, empty^j) by moving the
// j leading coordinates to the back: (x_1..x_m) -> (x_{j+1}..x_m, x_1..x_j).
inline Embedding prefix_shift_embedding(const SylowFixedPoint& f)
{
    const int j = f.empty_prefix();
    require(j >= 1, "prefix shift needs a nonzero empty-prefix");
    Embedding e;
    e.source = f;
    e.target = f;
    for (int i = 0; i < f.m; ++i) e.target.sets[i] = i + j < f.m ? f.sets[i + j] : std::vector<int>{};
    const int n = int(ipow(f.p, f.m));
    e.map.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto x = sylow_digits(f.p, f.m, v);
        std::rotate(x.begin(), x.begin() + std::min(j, f.m), x.end());
        e.map[v] = sylow_index(f.p, x);
    }
    return e;
}

// Does map send every edge of `from` onto an edge of `into`?
inline bool is_edge_embedding(const Graph& from, const Graph& into, const std::vector<int>& map)
{
    std::set<int> img(map.begin(), map.end());
    if (int(img.size()) != from.n()) return false;
    for (auto [u, v] : from.edges())
        if (!into.adjacent(map[u], map[v])) return false;
    return true;
}

// Product group of transitive factor groups acting blockwise on the join of
// the factor hosts. Its fixed points are the C[A^1..A^m].
inline FixedPointLattice product_lattice(const std::vector<FixedPointLattice>& factors)
{
    require(!factors.empty(), "product of no lattices");
    for (const auto& f : factors)
        if (!f.group.is_transitive()) throw PreconditionError("product lattice needs transitive factor groups");
    if (factors.size() == 1) return factors.front();
    const int m = int(factors.size());
    std::vector<Graph> hosts;
    for (const auto& f : factors) hosts.push_back(f.host);
    Graph host = inhabited_graph(complete_graph(m), hosts);
    PermutationGroup grp;
    grp.degree = host.n();
    int offset = 0;
    for (const auto& f : factors) {
        for (const auto& g : f.group.generators) {
            Perm full(static_cast<std::size_t>(host.n()));
            std::iota(full.begin(), full.end(), 0);
            for (int v = 0; v < f.host.n(); ++v) full[offset + v] = offset + g[v];
            grp.generators.push_back(full);
        }
        offset += f.host.n();
    }
    auto lat = orbit_partition(grp, host);
    int expect = m * (m - 1) / 2;
    for (const auto& f : factors) expect += f.orbit_count();
    ensure(lat.orbit_count() == expect, "product lattice orbit count mismatch");
    return lat;
}

} // namespace indsub
