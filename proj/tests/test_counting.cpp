#include <gtest/gtest.h>

#include "indsub/counting.hpp"
#include "indsub/random.hpp"

using namespace indsub;

TEST(Counting, IndSubExamples)
{
    auto clique = parse_parameter("clique-indicator");
    EXPECT_EQ(count_indsub(clique, 3, complete_graph(4)), 4);
    EXPECT_EQ(count_indsub(parse_parameter("independent-set-indicator"), 4, complete_graph(4)), 0);
    EXPECT_EQ(count_indsub(parse_parameter("edge-count"), 2, cycle_graph(5)), 5);
    EXPECT_EQ(count_indsub(parse_parameter("connected"), 5, complete_graph(4)), 0);
}

TEST(Counting, IndSubMatchesSubExpansion)
{
    Rng rng(5);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(rng, draw(rng, 4, 8));
        for (const auto& phi : builtin_parameters()) {
            Rational rhs = 0;
            const auto& t = small_table(4);
            for (Mask m : t.rep) {
                Graph h = from_mask(4, m);
                rhs += sign(h.edge_count()) * alternating_enumerator(phi, h) * Rational(count_sub(h, g));
            }
            EXPECT_EQ(count_indsub(phi, 4, g), rhs) << phi.name();
        }
    }
}

TEST(Counting, SubAndHom)
{
    EXPECT_EQ(count_sub(complete_graph(3), complete_graph(4)), 4);
    EXPECT_EQ(count_sub(path_graph(3), cycle_graph(5)), 5);
    EXPECT_EQ(count_hom(complete_graph(2), cycle_graph(5)), 10);
    EXPECT_EQ(count_hom(complete_graph(3), complete_graph(3)), 6);
    EXPECT_EQ(count_injective_hom(path_graph(3), complete_graph(3)), 6);
    Rng rng(9);
    for (int i = 0; i < 10; ++i) {
        Graph g = random_graph(rng, 7);
        for (const Graph& h : {star_graph(4), complete_bipartite(2, 3), path_graph(5), complete_graph(3)})
            EXPECT_EQ(count_sub_fast(h, g), count_sub(h, g));
    }
}

TEST(Counting, ColourfulCounts)
{
    // K3 host coloured by itself: one colourful triangle
    auto c = identity_coloring(complete_graph(3));
    EXPECT_EQ(count_cphom(c), 1);
    EXPECT_EQ(count_cp_indsub(parse_parameter("clique-indicator"), c), 1);
    HColoring bad{complete_graph(3), complete_graph(3), {0, 0, 1}};
    EXPECT_THROW(validate(bad), PreconditionError);
}

TEST(Counting, HomExpansion)
{
    Rng rng(2);
    for (const char* spec : {"connected", "edge-count", "component-count"}) {
        auto phi = parse_parameter(spec);
        for (const Graph& h : {path_graph(3), complete_graph(3), cycle_graph(4)}) {
            HColoring c{Graph(0), h, {}};
            int n = draw(rng, h.n(), 7);
            c.host = Graph(n);
            for (int v = 0; v < n; ++v) c.map.push_back(v < h.n() ? v : draw(rng, 0, h.n() - 1));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (h.adjacent(c.map[u], c.map[v]) && rng() % 2) c.host.add_edge(u, v);
            auto r = verify_cpindsub_hom_expansion(phi, c);
            EXPECT_EQ(r.lhs, r.rhs) << spec;
        }
    }
}

TEST(Counting, Fpt)
{
    Rng rng(4);
    auto phi = parse_parameter("edge-power:2");
    for (int i = 0; i < 5; ++i) {
        Graph g = random_graph(rng, 9);
        EXPECT_EQ(fpt_indsub(phi, 4, g, 3), count_indsub(phi, 4, g));
    }
    // 2K2 has chi != 0 and vertex cover 2
    EXPECT_THROW(fpt_indsub(phi, 4, complete_graph(4), 1), PreconditionError);
    EXPECT_THROW(fpt_indsub(phi, 4, complete_graph(4), 4), PreconditionError);
}

TEST(Counting, HostCap)
{
    EXPECT_THROW(count_indsub(parse_parameter("connected"), 2, Graph(65)), PreconditionError);
}
