#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace indsub {

using Edge = std::pair<int, int>;

// Simple undirected graph on [0,n). Adjacency is kept as one bitset row per
// vertex; most graphs here are tiny, but the clique graphs built from SAT
// gadgets can exceed 64 vertices, so rows are not fixed-width.
class Graph {
public:
    using Row = boost::dynamic_bitset<std::uint64_t>;

    Graph() = default;
    explicit Graph(int n) : n_(n), rows_(std::size_t(n), Row(static_cast<std::size_t>(n)))
    {
        require(n >= 0, "negative vertex count");
    }

    int n() const { return n_; }

    bool adjacent(int u, int v) const { return rows_[u][v]; }

    void add_edge(int u, int v)
    {
        check_pair(u, v);
        if (!rows_[u][v]) ++m_;
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void remove_edge(int u, int v)
    {
        check_pair(u, v);
        if (rows_[u][v]) --m_;
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    const Row& neighbours(int v) const { return rows_[v]; }
    int degree(int v) const { return int(rows_[v].count()); }
    int edge_count() const { return m_; }

    // Edges in column order: sorted by the larger endpoint, then the smaller.
    // This is the slot order used by edge masks and by graph6.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int v = 1; v < n_; ++v)
            for (int u = 0; u < v; ++u)
                if (rows_[u][v]) out.emplace_back(u, v);
        return out;
    }

    // Neighbourhood of v as a machine word. Only for n <= 64.
    std::uint64_t word(int v) const
    {
        std::uint64_t w = 0;
        boost::to_block_range(rows_[v], &w);
        return w;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} out of range for n=" + std::to_string(n_));
        if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<Row> rows_;
};

inline Graph make_graph(int n, const std::vector<Edge>& edges)
{
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u >= 0 && v < n && u != v && g.adjacent(u, v))
            throw PreconditionError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        g.add_edge(u, v);
    }
    return g;
}

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) g.add_edge(u, v);
    return g;
}

inline Graph independent_set(int n) { return Graph(n); }

inline Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

// Star on n vertices, centre 0.
inline Graph star_graph(int n)
{
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline Graph cycle_graph(int n)
{
    require(n >= 3, "cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

inline Graph join(const Graph& a, const Graph& b)
{
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) g.add_edge(u, a.n() + v);
    return g;
}

inline Graph edge_subgraph(const Graph& g, const std::vector<Edge>& s)
{
    Graph h(g.n());
    for (auto [u, v] : s) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v || !g.adjacent(u, v))
            throw PreconditionError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
        h.add_edge(u, v);
    }
    return h;
}

// Keeps the relative order of the chosen vertices.
inline Graph induced_subgraph(const Graph& g, std::vector<int> a)
{
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    for (int v : a)
        if (v < 0 || v >= g.n()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    Graph h(int(a.size()));
    for (std::size_t j = 1; j < a.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (g.adjacent(a[i], a[j])) h.add_edge(int(i), int(j));
    return h;
}

// Vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph complement(const Graph& g)
{
    Graph h(g.n());
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

// C[G_1..G_m]: parts laid out in order; blocks i and j fully joined when
// {i,j} is an edge of C.
inline Graph inhabited_graph(const Graph& c, const std::vector<Graph>& parts)
{
    if (int(parts.size()) != c.n())
        throw PreconditionError("inhabited graph: " + std::to_string(parts.size()) + " parts for " +
                                std::to_string(c.n()) + " vertices of C");
    std::vector<int> off(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) off[i + 1] = off[i] + parts[i].n();
    Graph g(off.back());
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (auto [u, v] : parts[i].edges()) g.add_edge(off[i] + u, off[i] + v);
    for (auto [i, j] : c.edges())
        for (int u = off[i]; u < off[i + 1]; ++u)
            for (int v = off[j]; v < off[j + 1]; ++v) g.add_edge(u, v);
    return g;
}

// Tuples (x_1..x_m) are flattened mixed-radix with x_1 most significant, so
// the product G_1 o G_2 has the same layout as G_1[G_2, .., G_2].
inline Graph lexicographic_product(const std::vector<Graph>& factors)
{
    require(!factors.empty(), "lexicographic product of no factors");
    Graph acc = factors.front();
    require(acc.n() > 0, "empty factor in lexicographic product");
    for (std::size_t i = 1; i < factors.size(); ++i) {
        require(factors[i].n() > 0, "empty factor in lexicographic product");
        acc = inhabited_graph(acc, std::vector<Graph>(std::size_t(acc.n()), factors[i]));
    }
    return acc;
}

// Circulant graph on Z_q with connection set A u -A. Prime q only.
inline Graph difference_graph(int q, const std::vector<int>& a)
{
    require(q >= 2 && [q] {
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    }(), "difference graph modulus must be prime");
    int top = q == 2 ? 1 : (q - 1) / 2;
    std::vector<bool> in(std::size_t(q), false);
    for (int x : a) {
        if (x < 1 || x > top)
            throw PreconditionError(std::to_string(x) + " is outside F_" + std::to_string(q) + "^+");
        in[std::size_t(x)] = in[std::size_t(q - x)] = true;
    }
    Graph g(q);
    for (int v = 1; v < q; ++v)
        for (int u = 0; u < v; ++u)
            if (in[std::size_t(v - u)]) g.add_edge(u, v);
    return g;
}

// Named small graphs for the CLI and tests: K3, IS4, P4, C5, S6, K2,3.
inline Graph named_graph(const std::string& s)
{
    auto num = [&](std::size_t from) {
        std::size_t used = 0;
        int v = std::stoi(s.substr(from), &used);
        if (from + used != s.size() && s[from + used] != ',') throw InputError("bad graph name " + s);
        return std::pair<int, std::size_t>(v, from + used);
    };
    try {
        if (s.rfind("IS", 0) == 0) return independent_set(num(2).first);
        if (s[0] == 'K' && s.find(',') != std::string::npos) {
            auto [a, at] = num(1);
            int b = std::stoi(s.substr(at + 1));
            return complete_bipartite(a, b);
        }
        if (s[0] == 'K') return complete_graph(num(1).first);
        if (s[0] == 'P') return path_graph(num(1).first);
        if (s[0] == 'C') return cycle_graph(num(1).first);
        if (s[0] == 'S') return star_graph(num(1).first);
    } catch (const std::logic_error&) {
    }
    throw InputError("unknown graph name '" + s + "'");
}

} // namespace indsub
