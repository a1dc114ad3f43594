#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"

namespace indsub {

// Edge masks. Slot of {i,j} (i<j) is j(j-1)/2 + i, the graph6 bit order;
// the slot of a pair does not depend on n, so a mask for n vertices is also
// a mask for any larger n.
using Mask = std::uint32_t;

constexpr int kCanonCap = 8;

constexpr int slot(int i, int j) { return j * (j - 1) / 2 + i; }
constexpr int slot_count(int n) { return n * (n - 1) / 2; }

inline Mask to_mask(const Graph& g)
{
    require(g.n() <= kCanonCap, "edge masks are limited to 8 vertices");
    Mask m = 0;
    for (auto [u, v] : g.edges()) m |= Mask(1) << slot(u, v);
    return m;
}

inline Graph from_mask(int n, Mask m)
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (m >> slot(u, v) & 1) g.add_edge(u, v);
    return g;
}

// The bitstring read with slot 0 as the most significant bit. Minimising it
// over relabelings gives the canonical form.
inline std::uint32_t key_value(int n, Mask m)
{
    const int len = slot_count(n);
    std::uint32_t r = 0;
    for (int s = 0; s < len; ++s) r |= ((m >> s) & 1u) << (len - 1 - s);
    return r;
}

inline Mask permute_mask(int n, Mask m, const std::vector<int>& perm)
{
    Mask r = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (m >> slot(u, v) & 1) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                r |= Mask(1) << slot(a, b);
            }
    return r;
}

inline std::string graph6_mask(int n, Mask m)
{
    std::string out(1, char(63 + n));
    const int len = slot_count(n);
    for (int s = 0; s < len; s += 6) {
        int c = 0;
        for (int b = 0; b < 6; ++b) c = (c << 1) | (s + b < len ? int((m >> (s + b)) & 1) : 0);
        out += char(63 + c);
    }
    return out;
}

// Mask -> isomorphism class id for all labeled graphs on n <= 7 vertices.
// Class ids follow canonical key order.
struct SmallGraphTable {
    int n = 0;
    std::vector<std::uint16_t> id;   // indexed by mask
    std::vector<Mask> rep;           // canonical mask per class
    std::vector<std::uint32_t> orbit;
    std::vector<int> edges;

    std::size_t classes() const { return rep.size(); }

    explicit SmallGraphTable(int n_) : n(n_)
    {
        const int len = slot_count(n);
        const std::uint32_t total = std::uint32_t(1) << len;
        constexpr std::uint16_t unset = 0xffff;
        id.assign(total, unset);

        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::vector<int>> maps;  // slot -> slot per permutation
        do {
            std::vector<int> sm(static_cast<std::size_t>(len));
            for (int v = 1; v < n; ++v)
                for (int u = 0; u < v; ++u) {
                    int a = perm[u], b = perm[v];
                    if (a > b) std::swap(a, b);
                    sm[slot(u, v)] = slot(a, b);
                }
            maps.push_back(std::move(sm));
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<std::pair<std::uint32_t, Mask>> keyed;
        std::vector<std::uint32_t> sizes;
        for (std::uint32_t m = 0; m < total; ++m) {
            if (id[m] != unset) continue;
            auto c = std::uint16_t(keyed.size());
            std::uint32_t best = key_value(n, m);
            Mask best_mask = m;
            std::uint32_t size = 0;
            for (const auto& sm : maps) {
                Mask img = 0;
                for (Mask x = m; x; x &= x - 1) img |= Mask(1) << sm[__builtin_ctz(x)];
                if (id[img] == unset) {
                    id[img] = c;
                    ++size;
                    auto kv = key_value(n, img);
                    if (kv < best) {
                        best = kv;
                        best_mask = img;
                    }
                }
            }
            keyed.emplace_back(best, best_mask);
            sizes.push_back(size);
        }
        std::vector<std::uint16_t> order(keyed.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keyed[a].first < keyed[b].first; });
        std::vector<std::uint16_t> remap(keyed.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            remap[order[i]] = std::uint16_t(i);
            rep.push_back(keyed[order[i]].second);
            orbit.push_back(sizes[order[i]]);
            edges.push_back(__builtin_popcount(keyed[order[i]].second));
        }
        for (auto& x : id) x = remap[x];
    }
};

inline const SmallGraphTable& small_table(int n)
{
    require(n >= 0 && n <= 7, "class tables exist for n <= 7 only");
    static std::array<std::unique_ptr<SmallGraphTable>, 8> tables;
    static std::array<std::once_flag, 8> once;
    std::call_once(once[std::size_t(n)], [n] { tables[std::size_t(n)] = std::make_unique<SmallGraphTable>(n); });
    return *tables[std::size_t(n)];
}

namespace detail {

// Column-by-column minimisation with pruning of interchangeable twins.
inline Mask canonical_mask_search(int n, Mask m)
{
    std::array<std::uint32_t, kCanonCap> nb{};
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (m >> slot(u, v) & 1) {
                nb[u] |= 1u << v;
                nb[v] |= 1u << u;
            }
    auto twins = [&](int a, int b) {
        std::uint32_t x = nb[a] & ~(1u << b), y = nb[b] & ~(1u << a);
        return x == y;
    };
    std::vector<std::vector<int>> frontier(1);
    for (int j = 0; j < n; ++j) {
        std::vector<std::vector<int>> next;
        std::uint32_t best = ~0u;
        for (const auto& pre : frontier) {
            std::uint32_t used = 0;
            for (int v : pre) used |= 1u << v;
            for (int v = 0; v < n; ++v) {
                if (used >> v & 1) continue;
                bool dup = false;
                for (int u = 0; u < v && !dup; ++u)
                    if (!(used >> u & 1) && twins(u, v)) dup = true;
                if (dup) continue;
                std::uint32_t col = 0;
                for (int i = 0; i < j; ++i) col = (col << 1) | (nb[pre[i]] >> v & 1);
                if (col > best) continue;
                if (col < best) {
                    best = col;
                    next.clear();
                }
                next.push_back(pre);
                next.back().push_back(v);
            }
        }
        frontier = std::move(next);
    }
    // frontier[0][i] = old vertex placed at position i
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[frontier[0][i]] = i;
    return permute_mask(n, m, perm);
}

} // namespace detail

inline Mask canonical_mask(int n, Mask m)
{
    require(n <= kCanonCap, "canonical form capped at 8 vertices");
    if (n <= 7) {
        const auto& t = small_table(n);
        return t.rep[t.id[m]];
    }
    return detail::canonical_mask_search(n, m);
}

struct CanonicalGraph {
    Graph graph;      // the canonically labeled representative
    std::string key;  // its graph6 string; equal iff isomorphic

    friend bool operator<(const CanonicalGraph& a, const CanonicalGraph& b)
    {
        if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
        return key_value(a.graph.n(), to_mask(a.graph)) < key_value(b.graph.n(), to_mask(b.graph));
    }
};

inline CanonicalGraph canonical_from_mask(int n, Mask m)
{
    Mask c = canonical_mask(n, m);
    return {from_mask(n, c), graph6_mask(n, c)};
}

inline CanonicalGraph canonical_form(const Graph& g)
{
    require(g.n() <= kCanonCap, "canonical form capped at 8 vertices (got " + std::to_string(g.n()) + ")");
    return canonical_from_mask(g.n(), to_mask(g));
}

inline std::string canonical_key(const Graph& g) { return canonical_form(g).key; }

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

inline std::vector<CanonicalGraph> enumerate_canonical_graphs(int k)
{
    require(k >= 0 && k <= kCanonCap, "graph enumeration capped at 8 vertices");
    std::vector<CanonicalGraph> out;
    if (k <= 7) {
        for (Mask m : small_table(k).rep) out.push_back({from_mask(k, m), graph6_mask(k, m)});
        return out;
    }
    // k = 8: extend every 7-vertex class by a new vertex in all ways
    std::set<std::uint32_t> keys;
    const int base = slot(0, 7);
    for (Mask r : small_table(7).rep)
        for (Mask s = 0; s < 128; ++s) keys.insert(key_value(8, detail::canonical_mask_search(8, r | s << base)));
    for (auto kv : keys) {
        // undo key_value: it is a bit reversal over 28 slots
        Mask m = key_value(8, kv);
        out.push_back({from_mask(8, m), graph6_mask(8, m)});
    }
    return out;
}

} // namespace indsub
