#include <gtest/gtest.h>

#include "indsub/enumerator.hpp"
#include "indsub/sylow_search.hpp"

using namespace indsub;

TEST(Enumerator, SmallValues)
{
    EXPECT_EQ(alternating_enumerator(parse_parameter("connected"), complete_graph(2)), -1);
    EXPECT_EQ(alternating_enumerator(parse_parameter("component-count"), complete_graph(2)), 1);
    EXPECT_EQ(alternating_enumerator(parse_parameter("disconnected"), complete_bipartite(2, 2)), 3);
    EXPECT_EQ(alternating_enumerator(parse_parameter("disconnected"), complete_bipartite(3, 3)), 31);
    // constants only survive on edgeless graphs
    EXPECT_EQ(alternating_enumerator(parse_parameter("constant:5"), path_graph(3)), 0);
    EXPECT_EQ(alternating_enumerator(parse_parameter("constant:5"), independent_set(3)), 5);
}

TEST(Enumerator, SmallAndLargeHostPathsAgree)
{
    // n = 8 takes the Gray-code sweep, n <= 7 the class histogram
    auto phi = parse_parameter("edge-count");
    Graph g = disjoint_union(path_graph(4), path_graph(4));
    Graph h = path_graph(4);
    // chi(#E, H) vanishes once H has two edges
    EXPECT_EQ(alternating_enumerator(phi, g), 0);
    EXPECT_EQ(alternating_enumerator(phi, h), 0);
    EXPECT_EQ(alternating_enumerator(phi, complete_graph(2)), -1);
}

TEST(Enumerator, EdgeCap)
{
    EXPECT_THROW(alternating_enumerator(parse_parameter("connected"), complete_graph(8)), PreconditionError);
}

TEST(Enumerator, EdgePowerVanishing)
{
    for (int c = 0; c <= 3; ++c) {
        auto phi = parse_parameter("edge-power:" + std::to_string(c));
        for (int k = 1; k <= 5; ++k)
            for (Mask m : small_table(k).rep) {
                Graph h = from_mask(k, m);
                if (h.edge_count() > c) {
                    EXPECT_EQ(alternating_enumerator(phi, h), 0);
                }
            }
    }
}

TEST(Enumerator, FixedPointResidueMatchesSweep)
{
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto lat = orbit_partition(sylow_generators(p, m), complete_graph(int(ipow(p, m))));
        for (const auto& phi : builtin_parameters()) {
            Rational exact = alternating_enumerator(phi, complete_graph(int(ipow(p, m))));
            if (!is_integer(exact)) continue;
            EXPECT_EQ(alternating_enumerator_mod_p(phi, lat, p), mod_p(exact, p)) << phi.name() << " p=" << p;
        }
    }
}

TEST(Enumerator, ModPNeedsPGroup)
{
    auto lat = orbit_partition(sylow_generators(3, 1), complete_graph(3));
    EXPECT_THROW(alternating_enumerator_mod_p(parse_parameter("connected"), lat, 2), PreconditionError);
}

TEST(SubBasis, AlphaIsSignedChi)
{
    for (const auto& phi : builtin_parameters())
        for (int k = 1; k <= 4; ++k) {
            auto d = subbasis_coefficients(phi, k);
            for (std::size_t i = 0; i < d.graphs.size(); ++i)
                EXPECT_EQ(d.alpha[i], sign(d.graphs[i].graph.edge_count()) * alternating_enumerator(phi, d.graphs[i].graph));
        }
    EXPECT_THROW(subbasis_coefficients(parse_parameter("connected"), 6), PreconditionError);
}

TEST(Sylow, FixedPointCounts)
{
    EXPECT_EQ(sylow_lattice(2, 1).size(), 2u);
    EXPECT_EQ(sylow_lattice(3, 1).size(), 2u);
    EXPECT_EQ(sylow_lattice(2, 2).size(), 4u);
    EXPECT_EQ(sylow_lattice(5, 1).size(), 4u);
    EXPECT_EQ(sylow_lattice(2, 3).size(), 8u);
    // two orbits on E(K_9): one per coordinate
    EXPECT_EQ(sylow_lattice(3, 2).size(), 4u);
    EXPECT_THROW(sylow_lattice(2, 4), PreconditionError);
}

TEST(Sylow, GroupOrders)
{
    EXPECT_EQ(sylow_generators(2, 3).order(), 128);
    EXPECT_EQ(sylow_generators(3, 2).order(), 81);
    EXPECT_TRUE(sylow_generators(5, 1).is_transitive());
}

TEST(Sylow, PrefixShiftEmbeds)
{
    for (const auto& f : sylow_points(2, 3)) {
        if (f.empty_prefix() == 0 || f.empty_prefix() == f.m) continue;
        auto e = prefix_shift_embedding(f);
        EXPECT_TRUE(is_edge_embedding(f.graph(), e.target.graph(), e.map)) << f.str();
    }
}

TEST(Sylow, NonvanishingPoint)
{
    auto r = find_nonvanishing_fixed_point(parse_parameter("disconnected"), 2, 2);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->point.empty_prefix(), 0);
    EXPECT_NE(r->residue, 0);
    EXPECT_NE(mod_p(alternating_enumerator(parse_parameter("disconnected"), r->graph), 2), 0);
    EXPECT_THROW(find_nonvanishing_fixed_point(parse_parameter("connected"), 2, 2), PreconditionError);
}
