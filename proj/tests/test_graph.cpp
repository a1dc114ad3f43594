#include <gtest/gtest.h>

#include "indsub/canonical.hpp"
#include "indsub/graph_algo.hpp"
#include "indsub/graph_io.hpp"
#include "indsub/random.hpp"

using namespace indsub;

TEST(Graph, EdgesAndErrors)
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_THROW(g.add_edge(2, 2), PreconditionError);
    EXPECT_THROW(g.add_edge(0, 4), PreconditionError);
    g.remove_edge(0, 1);
    EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph, NamedGraphs)
{
    EXPECT_EQ(named_graph("K4").edge_count(), 6);
    EXPECT_EQ(named_graph("C5").edge_count(), 5);
    EXPECT_EQ(named_graph("IS4").edge_count(), 0);
    EXPECT_EQ(named_graph("K2,3").edge_count(), 6);
    EXPECT_EQ(named_graph("P4").edge_count(), 3);
    EXPECT_THROW(named_graph("Z3"), InputError);
}

TEST(Graph, InhabitedAndJoin)
{
    // K2[IS2, IS2] = K_{2,2}
    Graph c = inhabited_graph(complete_graph(2), {independent_set(2), independent_set(2)});
    EXPECT_TRUE(isomorphic(c, complete_bipartite(2, 2)));
    EXPECT_TRUE(isomorphic(join(complete_graph(2), complete_graph(3)), complete_graph(5)));
}

TEST(Graph, DifferenceGraphs)
{
    EXPECT_TRUE(isomorphic(difference_graph(5, {1, 2}), complete_graph(5)));
    EXPECT_TRUE(isomorphic(difference_graph(5, {1}), cycle_graph(5)));
    EXPECT_EQ(difference_graph(3, {}).edge_count(), 0);
}

TEST(Graph, Graph6Roundtrip)
{
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, draw(rng, 0, 12));
        EXPECT_EQ(read_graph6(write_graph6(g)), g);
        EXPECT_EQ(graph_from_json(to_json(g)), g);
    }
    EXPECT_EQ(write_graph6(complete_graph(4)), "C~");
    EXPECT_THROW(read_graph6("C"), InputError);
}

TEST(Graph, JsonErrors)
{
    EXPECT_THROW(graph_from_json(json{{"n", 2}, {"edges", {{0, 5}}}}), std::exception);
    EXPECT_THROW(graph_from_json(json{{"edges", json::array()}}), InputError);
}

TEST(Canonical, ClassCounts)
{
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(small_table(n).classes(), expected[n]) << n;
}

TEST(Canonical, InvariantUnderRelabelling)
{
    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        int n = draw(rng, 1, 8);
        Graph g = random_graph(rng, n);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        shuffle_in_place(rng, perm);
        EXPECT_EQ(canonical_key(g), canonical_key(relabel(g, perm)));
    }
    EXPECT_FALSE(isomorphic(path_graph(4), star_graph(4)));
}

TEST(Algo, Basics)
{
    EXPECT_EQ(count_cliques(complete_graph(4), 3), 4);
    EXPECT_EQ(count_cliques(cycle_graph(5), 2), 5);
    EXPECT_EQ(chromatic_number(cycle_graph(5)), 3);
    EXPECT_EQ(component_count(independent_set(3)), 3);
    EXPECT_EQ(hamiltonian_path_count(complete_graph(4)), 12);
    EXPECT_EQ(perfect_matching_count(complete_graph(4)), 3);
    EXPECT_EQ(vertex_cover_number(path_graph(5)), 2);
    EXPECT_EQ(automorphism_count(cycle_graph(5)), 10);
    EXPECT_TRUE(contains_biclique(complete_bipartite(3, 3), 3, 3));
    EXPECT_FALSE(contains_biclique(cycle_graph(6), 2, 2));
    EXPECT_EQ(universal_vertex_count(star_graph(5)), 1);
}
