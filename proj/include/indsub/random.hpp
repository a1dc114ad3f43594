#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"

namespace indsub {

// Every randomized suite draws from one mt19937_64 stream, by plain modulo.
using Rng = std::mt19937_64;

inline int draw(Rng& rng, int lo, int hi) { return lo + int(rng() % std::uint64_t(hi - lo + 1)); }

// G(n, 1/2); pairs visited row-major (u < v, u outer).
inline Graph random_graph(Rng& rng, int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() % 2) g.add_edge(u, v);
    return g;
}

template <class T>
void shuffle_in_place(Rng& rng, std::vector<T>& v)
{
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

} // namespace indsub
