#include <gtest/gtest.h>

#include "indsub/random.hpp"
#include "indsub/reductions.hpp"

using namespace indsub;

TEST(Reductions, InstanceSize)
{
    auto f = find_biclique_host(parse_parameter("disconnected"), 2);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->graph.n(), 4);
    EXPECT_EQ(clique_to_cphom_instance(2, f->graph, complete_graph(3)).host.n(), 12);
}

TEST(Reductions, CliquesThroughIndSub)
{
    auto phi = parse_parameter("disconnected");
    Graph f = find_biclique_host(phi, 2)->graph;
    EXPECT_EQ(count_cliques_via_indsub(2, phi, f, complete_graph(4)).cliques, 6);
    EXPECT_EQ(count_cliques_via_indsub(2, phi, f, cycle_graph(5)).cliques, 5);
    EXPECT_EQ(count_cliques_via_indsub(2, phi, f, independent_set(4)).cliques, 0);

    Graph f3 = find_biclique_host(phi, 3)->graph;
    auto r = count_cliques_via_indsub(3, phi, f3, complete_graph(4));
    EXPECT_EQ(r.cliques, 4);
    EXPECT_LE(r.max_query, 2 * 3 * 4 + f3.n());
    EXPECT_GT(r.calls, 0u);
}

TEST(Reductions, VanishingPatternRejected)
{
    // chi(#E, P3) = 0
    EXPECT_THROW(count_cliques_via_indsub(2, parse_parameter("edge-power:1"), path_graph(3), complete_graph(3)),
                 PreconditionError);
}

TEST(Reductions, NoBicliqueFound)
{
    EXPECT_THROW(clique_to_cphom_instance(2, path_graph(4), complete_graph(3)), PreconditionError);
}

TEST(Lift, Examples)
{
    // K2[G, IS1] is G with a universal vertex
    LiftSpec s{complete_graph(2), {independent_set(1)}};
    EXPECT_EQ(lift_graph(s, independent_set(3)).edge_count(), 3);
    EXPECT_TRUE(isomorphic(lift_graph(s, complete_graph(3)), complete_graph(4)));
    EXPECT_EQ(s.padding(), 1);
    LiftSpec bad{complete_graph(3), {independent_set(1)}};
    EXPECT_THROW(validate(bad), PreconditionError);
}

TEST(Lift, Identity)
{
    Rng rng(8);
    auto phi = parse_parameter("component-count");
    LiftSpec s{path_graph(3), {independent_set(1), complete_graph(2)}};
    for (int i = 0; i < 5; ++i) {
        Graph h = complete_graph(3);
        HColoring c{Graph(5), h, {0, 1, 2, 0, 1}};
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                if (c.map[u] != c.map[v] && rng() % 2) c.host.add_edge(u, v);
        auto r = checked_lift_instance(phi, c, s);
        EXPECT_TRUE(r.equal) << r.lifted << " vs " << r.expanded;
    }
}

TEST(Dichotomy, Classify)
{
    auto r = classify_concentrated_reducible(parse_parameter("disconnected"), 6, 2, 1);
    EXPECT_NE(r.label, "neither");
    EXPECT_TRUE(r.concentrated || r.reducible);
    // needs p^t + p^(t+1) <= k
    EXPECT_THROW(classify_concentrated_reducible(parse_parameter("disconnected"), 5, 2, 1), PreconditionError);
    // codomain {0..6} is not below p
    EXPECT_THROW(classify_concentrated_reducible(parse_parameter("component-count"), 6, 2, 1), PreconditionError);
    EXPECT_THROW(classify_concentrated_reducible(parse_parameter("connected"), 6, 2, 1), PreconditionError);
}

TEST(Dichotomy, Scatter)
{
    auto two = [](int) { return 2L; };
    auto phi = parse_parameter("independent-set-indicator");
    auto s = scatter_membership(phi, two, 4);
    ASSERT_TRUE(s.has_value());
    EXPECT_TRUE(detail::lift_nontrivial_on(phi, *s, 2));
    // anything attached to G connects it, anything detached disconnects it
    EXPECT_FALSE(scatter_membership(parse_parameter("disconnected"), two, 4).has_value());
    EXPECT_THROW(scatter_membership(phi, [](int) { return 6L; }, 4), PreconditionError);
}
