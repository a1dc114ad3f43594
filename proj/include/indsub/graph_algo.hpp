#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"
#include "numeric.hpp"

namespace indsub {

inline int component_count(const Graph& g)
{
    std::vector<int> seen(std::size_t(g.n()), 0);
    int comps = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.assign(1, s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const auto& row = g.neighbours(u);
            for (auto w = row.find_first(); w != Graph::Row::npos; w = row.find_next(w))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(int(w));
                }
        }
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return g.n() > 0 && component_count(g) == 1; }

inline int max_degree(const Graph& g)
{
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

inline int universal_vertex_count(const Graph& g)
{
    int c = 0;
    for (int v = 0; v < g.n(); ++v) c += g.degree(v) == g.n() - 1;
    return c;
}

inline bool is_clique(const Graph& g)
{
    return 2L * g.edge_count() == long(g.n()) * (g.n() - 1);
}

inline int chromatic_number(const Graph& g)
{
    const int n = g.n();
    require(n <= 16, "chromatic number capped at 16 vertices");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    // colour in order of decreasing degree, smallest palette first
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> col(std::size_t(n), -1);
    std::function<bool(int, int, int)> go = [&](int i, int k, int used) {
        if (i == n) return true;
        int v = order[i];
        for (int c = 0; c < std::min(k, used + 1); ++c) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (col[order[j]] == c && g.adjacent(v, order[j])) ok = false;
            if (!ok) continue;
            col[v] = c;
            if (go(i + 1, k, std::max(used, c + 1))) return true;
        }
        col[v] = -1;
        return false;
    };
    for (int k = 2; k <= n; ++k)
        if (go(0, k, 0)) return k;
    return n;
}

// Undirected Hamiltonian paths, i.e. #Sub(P_n, G) for n >= 1.
inline Integer hamiltonian_path_count(const Graph& g)
{
    const int n = g.n();
    require(n <= 16, "Hamiltonian path count capped at 16 vertices");
    if (n == 0) return 0;
    if (n == 1) return 1;
    std::vector<std::uint64_t> dp((std::size_t(1) << n) * std::size_t(n), 0);
    auto at = [&](std::uint32_t mask, int v) -> std::uint64_t& { return dp[std::size_t(mask) * n + v]; };
    for (int v = 0; v < n; ++v) at(1u << v, v) = 1;
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[v] = g.word(v);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        for (int v = 0; v < n; ++v) {
            std::uint64_t c = at(mask, v);
            if (!c) continue;
            std::uint64_t ext = nb[v] & ~std::uint64_t(mask);
            while (ext) {
                int w = __builtin_ctzll(ext);
                ext &= ext - 1;
                at(mask | (1u << w), w) += c;
            }
        }
    Integer total = 0;
    for (int v = 0; v < n; ++v) total += Integer(std::to_string(at((1u << n) - 1, v)));
    return total / 2;
}

inline Integer perfect_matching_count(const Graph& g)
{
    const int n = g.n();
    require(n <= 64, "perfect matching count capped at 64 vertices");
    if (n % 2) return 0;
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[v] = g.word(v);
    std::function<Integer(std::uint64_t)> go = [&](std::uint64_t left) -> Integer {
        if (!left) return 1;
        int v = __builtin_ctzll(left);
        left &= left - 1;
        Integer s = 0;
        std::uint64_t cand = nb[v] & left;
        while (cand) {
            int w = __builtin_ctzll(cand);
            cand &= cand - 1;
            s += go(left & ~(std::uint64_t(1) << w));
        }
        return s;
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    return go(all);
}

inline int independence_number(const Graph& g)
{
    const int n = g.n();
    require(n <= 64, "independence number capped at 64 vertices");
    std::vector<std::uint64_t> nb(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nb[v] = g.word(v);
    int best = 0;
    std::function<void(std::uint64_t, int)> go = [&](std::uint64_t cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        if (size + __builtin_popcountll(cand) <= best) return;
        int v = __builtin_ctzll(cand);
        go(cand & ~nb[v] & ~(std::uint64_t(1) << v), size + 1);
        if (nb[v] & cand) go(cand & ~(std::uint64_t(1) << v), size);
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    go(all, 0);
    return best;
}

// K_{a,b} as a subgraph (not necessarily induced).
inline bool contains_biclique(const Graph& g, int a, int b)
{
    require(a >= 1 && b >= 1, "biclique sides must be positive");
    if (a > b) std::swap(a, b);
    const int n = g.n();
    if (a + b > n) return false;
    Graph::Row all(static_cast<std::size_t>(n));
    all.set();
    std::function<bool(int, int, const Graph::Row&)> go = [&](int from, int chosen, const Graph::Row& common) {
        if (chosen == a) return int(common.count()) >= b;
        for (int v = from; v < n; ++v) {
            Graph::Row next = common & g.neighbours(v);
            if (int(next.count()) < b) continue;
            if (go(v + 1, chosen + 1, next)) return true;
        }
        return false;
    };
    return go(0, 0, all);
}

inline std::vector<int> min_vertex_cover(const Graph& g)
{
    const int n = g.n();
    require(n <= 16, "vertex cover capped at 16 vertices");
    auto es = g.edges();
    std::vector<int> best, cur;
    for (int v = 0; v < n; ++v) best.push_back(v);
    std::vector<char> in(std::size_t(n), 0);
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        while (i < es.size() && (in[es[i].first] || in[es[i].second])) ++i;
        if (i == es.size()) {
            if (cur.size() < best.size()) best = cur;
            return;
        }
        if (cur.size() + 1 >= best.size()) return;
        for (int v : {es[i].first, es[i].second}) {
            in[v] = 1;
            cur.push_back(v);
            go(i + 1);
            cur.pop_back();
            in[v] = 0;
        }
    };
    go(0);
    std::sort(best.begin(), best.end());
    return best;
}

inline int vertex_cover_number(const Graph& g) { return int(min_vertex_cover(g).size()); }

// Calls f(perm) for every automorphism; perm[v] is the image of v.
template <class F>
void for_each_automorphism(const Graph& g, F&& f)
{
    const int n = g.n();
    std::vector<int> img(std::size_t(n), -1);
    std::vector<char> used(std::size_t(n), 0);
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            f(img);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(img[u], w);
            if (!ok) continue;
            used[w] = 1;
            img[v] = w;
            go(v + 1);
            used[w] = 0;
        }
        img[v] = -1;
    };
    go(0);
}

inline Integer automorphism_count(const Graph& g)
{
    require(g.n() <= 8, "automorphism count capped at 8 vertices");
    Integer c = 0;
    for_each_automorphism(g, [&](const std::vector<int>&) { ++c; });
    return c;
}

// Number of s-cliques (s >= 1).
inline Integer count_cliques(const Graph& g, int s)
{
    require(s >= 1, "clique size must be positive");
    const int n = g.n();
    Integer total = 0;
    std::uint64_t acc = 0;
    std::function<void(const Graph::Row&, int)> go = [&](const Graph::Row& cand, int need) {
        if (need == 0) {
            ++acc;
            return;
        }
        if (int(cand.count()) < need) return;
        for (auto v = cand.find_first(); v != Graph::Row::npos; v = cand.find_next(v)) {
            Graph::Row next = cand & g.neighbours(int(v));
            // keep only later vertices so each clique is seen once
            next >>= v + 1;
            next <<= v + 1;
            go(next, need - 1);
        }
    };
    Graph::Row all(static_cast<std::size_t>(n));
    all.set();
    go(all, s);
    total = Integer(std::to_string(acc));
    return total;
}

} // namespace indsub
