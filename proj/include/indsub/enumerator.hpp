#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "parameters.hpp"
#include "sylow.hpp"

namespace indsub {

constexpr int kEdgeSweepCap = 24;

namespace detail {

// Signed class histogram of all edge-subgraphs of a <= 7-vertex graph:
// out[c] = sum over S with G{S} in class c of (-1)^{|S|}. Gray-code order.
inline std::vector<std::int64_t> signed_subgraph_histogram(int n, Mask g)
{
    const auto& t = small_table(n);
    std::vector<std::int64_t> hist(t.classes(), 0);
    std::vector<Mask> bits;
    for (Mask x = g; x; x &= x - 1) bits.push_back(x & -x);
    const std::uint64_t total = std::uint64_t(1) << bits.size();
    Mask cur = 0;
    int parity = 0;
    hist[t.id[0]] += 1;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= bits[std::size_t(__builtin_ctzll(i))];
        parity ^= 1;
        hist[t.id[cur]] += parity ? -1 : 1;
    }
    return hist;
}

} // namespace detail

// chi(Phi, G) = sum over S subset E(G) of Phi(G{S}) (-1)^{|S|}.
inline Rational alternating_enumerator(const GraphParameter& phi, const Graph& g)
{
    require(g.edge_count() <= kEdgeSweepCap,
            "alternating enumerator capped at " + std::to_string(kEdgeSweepCap) + " edges");
    std::string key;
    if (g.n() <= kCanonCap) {
        key = canonical_key(g);
        if (auto hit = phi.cached_ae(key)) return *hit;
    }
    Rational total = 0;
    if (g.n() <= 7) {
        auto hist = detail::signed_subgraph_histogram(g.n(), to_mask(g));
        const auto& val = phi.class_values(g.n());
        for (std::size_t c = 0; c < hist.size(); ++c)
            if (hist[c]) total += val[c] * Rational(hist[c]);
    } else {
        auto es = g.edges();
        Graph cur(g.n());
        int parity = 0;
        total += phi(cur);
        for (std::uint64_t i = 1; i < (std::uint64_t(1) << es.size()); ++i) {
            auto [u, v] = es[std::size_t(__builtin_ctzll(i))];
            if (cur.adjacent(u, v)) cur.remove_edge(u, v);
            else cur.add_edge(u, v);
            parity ^= 1;
            total += parity ? -phi(cur) : phi(cur);
        }
    }
    if (!key.empty()) phi.store_ae(key, total);
    return total;
}

// chi for every class of small_table(k), in class id order.
inline std::vector<Rational> alternating_enumerator_table(const GraphParameter& phi, int k)
{
    require(k >= 0 && k <= 7, "enumerator tables capped at k <= 7");
    std::vector<Rational> out;
    for (Mask m : small_table(k).rep) out.push_back(alternating_enumerator(phi, from_mask(k, m)));
    return out;
}

// Sum over the fixed points A of Phi(A)(-1)^{#E(A)}, mod p. The lattice group
// must be a p-group acting on the host.
inline long alternating_enumerator_mod_p(const GraphParameter& phi, const FixedPointLattice& lat, long p)
{
    require(is_prime(p), "p must be prime");
    if (!lat.group.generators.empty()) {
        Integer ord = lat.group.order();
        long q = 0;
        int t = 0;
        require(ord == 1 || (prime_power(ord.get_si(), &q, &t) && q == p),
                "lattice group order " + str(ord) + " is not a power of " + std::to_string(p));
    }
    long acc = 0;
    for (auto fp : lat.fixed_points()) {
        Graph a = lat.point(fp);
        long v = mod_p(phi(a), p);
        acc = (acc + ((a.edge_count() & 1) ? p - v : v)) % p;
    }
    return acc;
}

struct CriterionResult {
    bool holds = false;
    Rational a, b;  // value at the point, common value of the proper sub-points
    long residue = 0;
};

// If every proper sub-point of A has the same value b and Phi(A) = a != b,
// chi(Phi, A) = (-1)^{l(A)+1}(b - a) mod p; the lattice sum over the
// sub-points is checked against that.
inline CriterionResult check_nonvanishing_criterion(const FixedPointLattice& lat, std::uint64_t a_set,
                                                    const GraphParameter& phi, long p)
{
    require(is_prime(p), "p must be prime");
    if (auto c = phi.codomain_bound(lat.host.n()))
        require(*c < p, "codomain bound " + std::to_string(*c) + " is not below p=" + std::to_string(p));
    auto check_range = [&](const Rational& v) {
        require(is_integer(v) && v >= 0 && v < p, "value " + str(v) + " outside {0..p-1}");
    };
    CriterionResult r;
    Graph top = lat.point(a_set);
    r.a = phi(top);
    check_range(r.a);
    bool first = true, uniform = true;
    long sum = 0;
    for (std::uint64_t b = a_set;; b = (b - 1) & a_set) {
        Graph g = lat.point(b);
        Rational v = b == a_set ? r.a : phi(g);
        check_range(v);
        if (b != a_set) {
            if (first) r.b = v, first = false;
            else if (v != r.b) uniform = false;
        }
        long x = mod_p(v, p);
        sum = (sum + ((g.edge_count() & 1) ? p - x : x)) % p;
        if (b == 0) break;
    }
    r.residue = sum;
    if (first) return r;  // A has no proper sub-point
    r.holds = uniform && r.a != r.b;
    if (r.holds) {
        Rational expect = sign(FixedPointLattice::level(a_set) + 1) * (r.b - r.a);
        ensure(mod_p(expect, p) == sum, "nonvanishing criterion: lattice sum disagrees with (-1)^{l+1}(b-a)");
        if (top.edge_count() <= kEdgeSweepCap)
            ensure(mod_p(alternating_enumerator(phi, top), p) == sum,
                   "nonvanishing criterion: exact enumerator disagrees with the lattice sum");
    }
    return r;
}

struct SubBasisDecomposition {
    int k = 0;
    std::vector<CanonicalGraph> graphs;  // class id order
    std::vector<Rational> alpha;

    Rational coefficient(const std::string& key) const
    {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            if (graphs[i].key == key) return alpha[i];
        throw PreconditionError("no class with key " + key);
    }
};

// sub[f][h] = #Sub(F, H) for k-vertex classes F, H: the number of edge
// subsets of H whose spanning subgraph is isomorphic to F.
inline std::vector<std::vector<std::int64_t>> same_size_sub_counts(int k)
{
    const auto& t = small_table(k);
    std::vector<std::vector<std::int64_t>> sub(t.classes(), std::vector<std::int64_t>(t.classes(), 0));
    for (std::size_t h = 0; h < t.classes(); ++h) {
        Mask m = t.rep[h];
        for (Mask s = m;; s = (s - 1) & m) {
            ++sub[t.id[s]][h];
            if (!s) break;
        }
    }
    return sub;
}

// alpha(H) = Phi(H) - sum_{F != H} alpha(F) #Sub(F, H), increasing #E.
inline SubBasisDecomposition subbasis_coefficients(const GraphParameter& phi, int k)
{
    require(k >= 1 && k <= 5, "sub-basis decomposition capped at k <= 5");
    const auto& t = small_table(k);
    const auto& val = phi.class_values(k);
    auto sub = same_size_sub_counts(k);
    std::vector<std::size_t> order(t.classes());
    std::iota(order.begin(), order.end(), std::size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return t.edges[a] < t.edges[b]; });
    SubBasisDecomposition d;
    d.k = k;
    d.alpha.assign(t.classes(), 0);
    for (std::size_t h : order) {
        Rational a = val[h];
        for (std::size_t f = 0; f < t.classes(); ++f)
            if (f != h && sub[f][h]) a -= d.alpha[f] * Rational(sub[f][h]);
        d.alpha[h] = a;
    }
    for (std::size_t c = 0; c < t.classes(); ++c) {
        Graph g = from_mask(k, t.rep[c]);
        d.graphs.push_back({g, graph6_mask(k, t.rep[c])});
        ensure(d.alpha[c] == sign(t.edges[c]) * alternating_enumerator(phi, g),
               "sub-basis coefficient differs from (-1)^{#E} chi for " + d.graphs.back().key);
    }
    return d;
}

} // namespace indsub
