#pragma once

#include <optional>

#include "enumerator.hpp"
#include "sylow.hpp"

namespace indsub {

struct NonvanishingPoint {
    SylowFixedPoint point;
    Graph graph;
    int level = 0;
    long residue = 0;  // chi(Phi, graph) mod p
};

// For edge-monotone Phi into {0..c}, c < p, nontrivial on p^t: the lowest
// level at which some Sylow point drops below z = Phi(IS_{p^t}) holds a
// prefix-0 point; every proper sub-point of it has value z, so its enumerator
// does not vanish mod p. Ties go to the smallest tuple code.
inline std::optional<NonvanishingPoint> find_nonvanishing_fixed_point(const GraphParameter& phi, int p, int t)
{
    require(is_prime(p), "p must be prime");
    require(t >= 1, "t must be positive");
    const int n = int(ipow(p, t));
    require(n <= 9, "nonvanishing search capped at p^t <= 9");
    if (n <= 7) require(is_edge_monotone_on(phi, n), phi.name() + " is not edge-monotone on " + std::to_string(n));
    if (auto c = phi.codomain_bound(n))
        require(*c < p, "codomain bound " + std::to_string(*c) + " is not below p=" + std::to_string(p));

    const Rational z = phi(independent_set(n));
    if (z == phi(complete_graph(n))) return std::nullopt;  // monotone and constant on the extremes

    auto pts = sylow_lattice(p, t);
    std::vector<Rational> val;
    for (const auto& f : pts) {
        val.push_back(phi(f.graph()));
        require(is_integer(val.back()) && val.back() >= 0 && val.back() < p,
                "value " + str(val.back()) + " outside {0..p-1}");
    }
    int best_level = -1;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (val[i] < z && (best_level < 0 || pts[i].level() < best_level)) best_level = pts[i].level();
    ensure(best_level >= 0, "no Sylow point drops below Phi(IS)");

    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].level() == best_level && val[i] < z && pts[i].empty_prefix() == 0)
            if (!pick || pts[i].code() < pts[*pick].code()) pick = i;
    ensure(pick.has_value(), "no prefix-0 point at the lowest dropping level");

    NonvanishingPoint out;
    out.point = pts[*pick];
    out.graph = out.point.graph();
    out.level = best_level;

    auto lat = orbit_partition(sylow_generators(p, t), complete_graph(n));
    std::uint64_t set = 0;
    for (std::size_t e = 0; e < lat.edges.size(); ++e)
        if (out.graph.adjacent(lat.edges[e].first, lat.edges[e].second)) set |= std::uint64_t(1) << lat.orbit_of[e];
    ensure(FixedPointLattice::level(set) == best_level, "orbit level differs from the tuple level");
    auto crit = check_nonvanishing_criterion(lat, set, phi, p);
    ensure(crit.holds && crit.residue != 0, "selected point does not satisfy the nonvanishing criterion");
    out.residue = crit.residue;
    const int side = int(ipow(p, t - 1));
    ensure(contains_biclique(out.graph, side, side), "selected point lacks the expected biclique");
    return out;
}

} // namespace indsub
