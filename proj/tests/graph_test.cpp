#include <gtest/gtest.h>

#include "gpdrift/error.hpp"
#include "gpdrift/graph.hpp"
#include "test_support.hpp"

using namespace gpdrift;
using namespace gpdrift::testing;

namespace {

ErrorKind error_kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected gpdrift::Error";
    return ErrorKind::io;
}

}  // namespace

TEST(ParseGraph, JsonFiveCycle) {
    auto g = parse_graph(R"({"vertices": ["a","b","c","d","e"],
                             "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]})");
    EXPECT_EQ(g.vertex_count(), 5);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_TRUE(g.adjacent(4, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(g.label(2), "c");
    EXPECT_EQ(g.find_label("e"), 4);
}

TEST(ParseGraph, SelfLoopRejected) {
    EXPECT_EQ(error_kind_of([] { parse_graph(R"({"vertices":["a"],"edges":[[0,0]]})"); }),
              ErrorKind::invalid_argument);
}

TEST(ParseGraph, OutOfRangeEdgeRejected) {
    EXPECT_EQ(error_kind_of([] { parse_graph(R"({"vertices":["a","b"],"edges":[[0,2]]})"); }),
              ErrorKind::invalid_argument);
}

TEST(ParseGraph, MalformedJson) {
    EXPECT_EQ(error_kind_of([] { parse_graph(R"({"vertices": ["a", )"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind_of([] { parse_graph(R"({"edges": []})"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind_of([] { parse_graph(R"({"vertices":["a","b"],"edges":[[0]]})"); }), ErrorKind::parse);
}

TEST(ParseGraph, DuplicateEdgesMerged) {
    auto g = parse_graph(R"({"vertices":["a","b","c"],"edges":[[0,1],[1,0],[0,1],[1,2]]})");
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.duplicate_edges(), 2u);
    EXPECT_EQ(g.neighbours(1), (std::vector<Vertex>{0, 2}));
}

TEST(ParseGraph, EdgelessIsFreeProduct) {
    auto g = parse_graph(R"({"vertices":["x","y","z"],"edges":[]})");
    EXPECT_EQ(g.vertex_count(), 3);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_EQ(max_clique_size(g), 1);
}

TEST(ParseGraph, PlainEdgeList) {
    auto g = parse_graph("# five cycle\n0 1\n1 2\n2 3\n\n3 4\n4 0\n");
    EXPECT_EQ(g.vertex_count(), 5);
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_EQ(error_kind_of([] { parse_graph("0 1 2\n"); }), ErrorKind::parse);
    EXPECT_EQ(error_kind_of([] { parse_graph("1 1\n"); }), ErrorKind::invalid_argument);
    EXPECT_EQ(error_kind_of([] { parse_graph(""); }), ErrorKind::parse);
}

TEST(Cliques, KnownValues) {
    EXPECT_EQ(max_clique_size(cycle_graph(5)), 2);
    EXPECT_EQ(max_clique_neighbourhood(cycle_graph(5)), 4);
    EXPECT_EQ(max_clique_size(complete_graph(4)), 4);
    EXPECT_EQ(max_clique_neighbourhood(complete_graph(4)), 4);
    EXPECT_EQ(max_clique_size(edgeless_graph(7)), 1);
    EXPECT_EQ(max_clique_neighbourhood(edgeless_graph(7)), 1);
    EXPECT_EQ(max_clique_size(cycle_graph(3)), 3);
}

TEST(Cliques, CycleFamily) {
    for (std::int32_t d : {5, 6, 7, 16, 17, 50, 100, 1000, 20000}) {
        auto s = stats(cycle_graph(d));
        EXPECT_EQ(s.D, d);
        EXPECT_EQ(s.C, 2) << d;
        EXPECT_EQ(s.B, 4) << d;
        EXPECT_EQ(s.small_cliques, d > 16) << d;
    }
}

TEST(Cliques, SmallCliquesBoundary) {
    EXPECT_TRUE(stats(cycle_graph(17)).small_cliques);
    EXPECT_FALSE(stats(cycle_graph(16)).small_cliques);
    EXPECT_FALSE(stats(cycle_graph(5)).small_cliques);
}

TEST(Cliques, MaximalCliquesAreMaximalAndDistinct) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_graph(12, 0.4, rng);
        auto cliques = maximal_cliques(g);
        std::sort(cliques.begin(), cliques.end());
        EXPECT_TRUE(std::adjacent_find(cliques.begin(), cliques.end()) == cliques.end());
        for (const auto& k : cliques) {
            EXPECT_TRUE(is_clique(g, k));
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (std::binary_search(k.begin(), k.end(), v)) continue;
                auto bigger = k;
                bigger.push_back(v);
                EXPECT_FALSE(is_clique(g, bigger));
            }
        }
    }
}

TEST(Cliques, CliqueNumberMatchesSubsetEnumeration) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::int32_t d = std::uniform_int_distribution<std::int32_t>(1, 20)(rng);
        double p = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
        auto g = random_graph(d, p, rng);
        ASSERT_EQ(max_clique_size(g), brute_force_clique_number(g)) << "D=" << d << " p=" << p;
    }
}

TEST(Cliques, NeighbourhoodOverMaximalEqualsAllCliques) {
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        std::int32_t d = std::uniform_int_distribution<std::int32_t>(1, 12)(rng);
        double p = std::uniform_real_distribution<double>(0.0, 0.9)(rng);
        auto g = random_graph(d, p, rng);
        auto s = stats(g);
        ASSERT_EQ(s.B, brute_force_neighbourhood(g));
        EXPECT_LE(1, s.C);
        EXPECT_LE(s.C, s.B);
        EXPECT_LE(s.B, s.D);
        EXPECT_EQ(s.small_cliques, s.D > 3 * s.B + 2 * s.C);
    }
}

TEST(Cliques, DenseGraphOfFiftyVertices) {
    Rng rng(5);
    auto g = random_graph(50, 0.5, rng);
    auto s = stats(g);
    EXPECT_GE(s.C, 5);
    EXPECT_LE(s.B, 50);
    for (const auto& k : maximal_cliques(g)) ASSERT_TRUE(is_clique(g, k));
}
