#include <gtest/gtest.h>

#include "indsub/modular.hpp"

using namespace indsub;

TEST(Modular, NumCliqueFromModClique)
{
    for (long p : {2L, 3L, 5L}) {
        auto o = clique_mod_oracle(3, p);
        EXPECT_EQ(numclique_from_modclique(complete_graph(4), 3, o), 4 % p);
        EXPECT_EQ(numclique_from_modclique(cycle_graph(5), 3, o), 0);
        EXPECT_EQ(numclique_from_modclique(complete_graph(5), 3, o), 10 % p);
    }
    EXPECT_THROW(clique_mod_oracle(3, 4), PreconditionError);
}

TEST(Modular, PipelineDiamondForThree)
{
    auto phi = parse_parameter("disconnected");
    // K_{2,2} has chi = 3, useless mod 3
    EXPECT_EQ(mod_p(alternating_enumerator(phi, complete_bipartite(2, 2)), 3), 0);
    EXPECT_THROW(mod_p_clique_via_indsub(2, phi, complete_bipartite(2, 2), complete_graph(4), 3), PreconditionError);
    auto f = find_biclique_host(phi, 2, 3);
    ASSERT_TRUE(f.has_value());
    EXPECT_NE(mod_p(alternating_enumerator(phi, f->graph), 3), 0);
    EXPECT_EQ(mod_p_clique_via_indsub(2, phi, f->graph, complete_graph(4), 3), 0);
    EXPECT_EQ(mod_p_clique_via_indsub(2, phi, f->graph, cycle_graph(5), 3), 2);
}

TEST(Modular, Dimacs)
{
    auto f = parse_dimacs("c hi\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    EXPECT_EQ(f.n, 3);
    EXPECT_EQ(f.m(), 2);
    EXPECT_EQ(f.clauses[1][2], -3);
    EXPECT_EQ(count_sat(f), 6);
    EXPECT_THROW(parse_dimacs("1 2 3 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2 5 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 2 0\n"), InputError);
    EXPECT_THROW(parse_dimacs("p cnf 3 2\n1 2 3 0\n"), InputError);
}

TEST(Gadget, SingleClause)
{
    auto f = parse_dimacs("p cnf 1 1\n1 1 1 0\n");
    auto gd = sat_to_coloring_graph(f);
    EXPECT_EQ(gd.graph.n(), 3 + 2 + 6);
    EXPECT_EQ(gd.valid.size(), 7u);
    EXPECT_EQ(gd.valid.count(7), 0u);  // all literals F
    EXPECT_EQ(count_valid_proper_colorings(gd), count_sat(f));

    auto three = parse_dimacs("p cnf 3 1\n1 2 3 0\n");
    auto g3 = sat_to_coloring_graph(three);
    EXPECT_EQ(g3.graph.n(), 15);
    EXPECT_EQ(count_valid_proper_colorings(g3), 7);
    EXPECT_EQ(count_cliques(coloring_to_clique_graph(g3, 1).graph, 3), 7);
}

TEST(Gadget, Parsimony)
{
    Rng rng(13);
    for (int i = 0; i < 6; ++i) {
        auto f = random_cnf(rng, draw(rng, 3, 5), draw(rng, 2, 4));
        auto gd = sat_to_coloring_graph(f);
        for (int k = 1; k <= 2; ++k)
            EXPECT_EQ(count_cliques(coloring_to_clique_graph(gd, k).graph, 2 * k + 1), count_sat(f));
    }
}
