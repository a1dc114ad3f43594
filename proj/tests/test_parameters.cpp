#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "indsub/enumerator.hpp"
#include "indsub/parameters.hpp"

using namespace indsub;

TEST(Parameters, BuiltinValues)
{
    Graph g = disjoint_union(complete_graph(3), complete_graph(1));
    EXPECT_EQ(parse_parameter("connected")(g), 0);
    EXPECT_EQ(parse_parameter("disconnected")(g), 1);
    EXPECT_EQ(parse_parameter("component-count")(g), 2);
    EXPECT_EQ(parse_parameter("edge-power:2")(g), 9);
    EXPECT_EQ(parse_parameter("edge-count")(g), 3);
    EXPECT_EQ(parse_parameter("max-degree")(g), 2);
    EXPECT_EQ(parse_parameter("chromatic-number")(g), 3);
    EXPECT_EQ(parse_parameter("independence-number")(g), 2);
    EXPECT_EQ(parse_parameter("constant:3/2")(g), Rational(3, 2));
}

TEST(Parameters, UnknownAndBadInput)
{
    EXPECT_THROW(parse_parameter("wibble"), InputError);
    EXPECT_THROW(parse_parameter("edge-power:x"), InputError);
    EXPECT_THROW(parse_parameter("edge-power:99"), PreconditionError);
}

TEST(Parameters, TableFile)
{
    auto dir = std::filesystem::temp_directory_path() / "indsub_param_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "t.json").string();
    std::ofstream(path) << R"({"k": 3, "Bw": 1, "default": "1/2"})";  // Bw = K3
    auto phi = parse_parameter("table:" + path);
    EXPECT_EQ(phi(complete_graph(3)), 1);
    EXPECT_EQ(phi(path_graph(3)), Rational(1, 2));

    std::ofstream(path) << R"({"k": 3, "Bw": 1, "C~": 2})";
    EXPECT_THROW(parse_parameter("table:" + path), InputError);
    std::ofstream(path) << R"({"Bw": 1})";
    EXPECT_THROW(parse_parameter("table:" + path), InputError);
}

TEST(Parameters, IndicatorDecomposition)
{
    auto phi = parse_parameter("component-count");
    for (int k = 1; k <= 5; ++k)
        for (Mask m : small_table(k).rep) {
            Graph g = from_mask(k, m);
            Rational sum = 0;
            for (const auto& [b, ind] : indicator_decomposition(phi, k)) sum += b * ind(g);
            EXPECT_EQ(sum, phi(g));
        }
}

TEST(Parameters, MonotoneAndNontrivial)
{
    EXPECT_TRUE(is_edge_monotone_on(parse_parameter("disconnected"), 5));
    EXPECT_FALSE(is_edge_monotone_on(parse_parameter("connected"), 5));
    EXPECT_TRUE(is_nontrivial_on(parse_parameter("connected"), 3));
    EXPECT_FALSE(is_nontrivial_on(parse_parameter("constant:2"), 4));
}

TEST(Parameters, CacheRoundtrip)
{
    auto dir = (std::filesystem::temp_directory_path() / "indsub_cache_test").string();
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto phi = parse_parameter("connected");
    Rational v = alternating_enumerator(phi, complete_graph(4));
    phi.save_cache(dir);
    auto again = parse_parameter("connected");
    again.load_cache(dir);
    auto hit = again.cached_ae(canonical_key(complete_graph(4)));
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, v);
}
