#include <doctest.h>

#include <random>

#include "noderel/errors.hpp"
#include "noderel/graph.hpp"
#include "noderel/graph_expr.hpp"
#include "test_support.hpp"

using namespace noderel;

TEST_CASE("path") {
    const Graph p5 = path(5);
    CHECK(p5.order() == 5);
    CHECK(p5.size() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(4) == 1);
    CHECK(p5.degree(2) == 2);

    const Graph p1 = path(1);
    CHECK(p1.order() == 1);
    CHECK(p1.size() == 0);

    CHECK(path(2) == complete(2));
    CHECK_THROWS_AS(path(0), InvalidOrderError);
}

TEST_CASE("complete") {
    CHECK(complete(3).size() == 3);
    CHECK(complete(1).size() == 0);
    const Graph k4 = complete(4);
    CHECK(k4.size() == 6);
    for (Vertex v = 0; v < 4; ++v) {
        CHECK(k4.degree(v) == 3);
    }
    CHECK_THROWS_AS(complete(0), InvalidOrderError);
}

TEST_CASE("from_edge_list") {
    const std::vector<Edge> p3_edges{{0, 1}, {1, 2}};
    CHECK(Graph::from_edge_list(3, p3_edges) == path(3));

    const Graph two = Graph::from_edge_list(2, {});
    CHECK(two.size() == 0);
    CHECK_FALSE(is_connected(two));

    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    const Graph g = Graph::from_edge_list(3, dup);
    CHECK(g.size() == 1);
    CHECK(g.degree(2) == 0);

    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, out_of_range), IndexError);
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edge_list(3, loop), SelfLoopError);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), InvalidOrderError);
}

TEST_CASE("from_adjacency rejects asymmetric input") {
    CHECK_THROWS(Graph::from_adjacency({{1}, {}}));
    CHECK_THROWS_AS(Graph::from_adjacency({{0}}), SelfLoopError);
}

TEST_CASE("lex_product_clique") {
    CHECK(lex_product_clique(path(2), 2) == complete(4));
    CHECK(lex_product_clique(path(5), 1) == path(5));

    // Edge count n*C(l,2) + |E|*l^2: 3*1 + 2*4 = 11.
    const Graph g = lex_product_clique(path(3), 2);
    CHECK(g.order() == 6);
    CHECK(g.size() == 11);
    CHECK(g.adjacent(0, 1));  // block of vertex 0
    CHECK(g.adjacent(1, 2));  // blocks 0 and 1 joined
    CHECK_FALSE(g.adjacent(0, 4));  // blocks 0 and 2 not joined
    CHECK_THROWS_AS(lex_product_clique(path(3), 0), InvalidOrderError);
}

TEST_CASE("lex_product_clique edge-count formula on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = testing::random_graph(rng, 1 + trial % 7, 0.5);
        for (std::size_t l = 1; l <= 4; ++l) {
            const Graph h = lex_product_clique(g, l);
            CHECK(h.order() == g.order() * l);
            CHECK(h.size() == g.order() * l * (l - 1) / 2 + g.size() * l * l);
            CHECK(testing::is_simple(h));
        }
    }
}

TEST_CASE("add_isolated and add_universal") {
    const Graph two = add_isolated(path(1));
    CHECK(two.order() == 2);
    CHECK(two.size() == 0);

    // K_1 joined to 2K_1 is the star on 3 vertices with the new vertex as centre.
    const Graph star = add_universal(Graph::from_edge_list(2, {}));
    const std::vector<Edge> star_edges{{0, 2}, {1, 2}};
    CHECK(star == Graph::from_edge_list(3, star_edges));
    CHECK(star.degree(2) == 2);

    CHECK(add_universal(complete(2)) == complete(3));

    const Graph g = path(4);
    CHECK(add_isolated(g).degree(4) == 0);
    CHECK(add_universal(g).degree(4) == 4);
    CHECK(testing::is_simple(add_universal(g)));
}

TEST_CASE("induced_connected") {
    const Graph p5 = path(5);
    const std::vector<Vertex> prefix{0, 1, 2};
    const std::vector<Vertex> gap{0, 2};
    CHECK(induced_connected(p5, prefix));
    CHECK_FALSE(induced_connected(p5, gap));
    CHECK_FALSE(induced_connected(p5, {}));
    CHECK_FALSE(induced_connected(complete(3), {}));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testing::random_graph(rng, 1 + trial % 8, 0.35);
        for (Vertex v = 0; v < g.order(); ++v) {
            const std::vector<Vertex> single{v};
            CHECK(induced_connected(g, single));
        }
        std::vector<Vertex> all(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            all[v] = v;
        }
        CHECK(induced_connected(g, all) == testing::connected_by_union_find(g));
    }
}

TEST_CASE("induced_connected_mask agrees with the list form") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = testing::random_graph(rng, 6, 0.4);
        std::vector<std::uint64_t> masks(g.order());
        for (Vertex v = 0; v < g.order(); ++v) {
            masks[v] = g.neighbor_mask(v);
        }
        for (std::uint64_t s = 0; s < 64; ++s) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < 6; ++v) {
                if ((s >> v) & 1) {
                    members.push_back(v);
                }
            }
            CHECK(induced_connected_mask(masks, s) == induced_connected(g, members));
        }
    }
}

TEST_CASE("realize") {
    const auto p5 = GraphExpr::base(path(5), "P5");
    CHECK(realize(p5) == path(5));

    const auto star = GraphExpr::base(Graph::from_edge_list(2, {})).add_universal();
    CHECK(realize(star) == add_universal(Graph::from_edge_list(2, {})));
    CHECK(realize(star).size() == 2);

    const auto p3k2 = GraphExpr::base(path(3), "P3").sub_clique(2);
    CHECK(realize(p3k2) == lex_product_clique(path(3), 2));
    CHECK(realize(p3k2).size() == 11);
}

TEST_CASE("realize order bookkeeping and identity substitution") {
    const auto e = GraphExpr::base(path(4), "P4").sub_clique(3).add_isolated().sub_clique(2).add_universal();
    CHECK(e.order() == (4 * 3 + 1) * 2 + 1);
    CHECK(realize(e).order() == e.order());
    CHECK(e.depth() == 4);

    const auto base = GraphExpr::base(path(4), "P4").add_isolated();
    CHECK(realize(base.sub_clique(1)) == realize(base));
}

TEST_CASE("realize enforces the cap") {
    const auto big = GraphExpr::base(path(5), "P5").sub_clique(1000).sub_clique(1000);
    try {
        (void)realize(big);
        FAIL("expected a size-limit error");
    } catch (const SizeLimitError& e) {
        CHECK(e.requested() == 5'000'000);
        CHECK(e.cap() == kDefaultRealizationCap);
    }
    CHECK_NOTHROW((void)realize(GraphExpr::base(path(5), "P5").sub_clique(3), 15));
    CHECK_THROWS_AS((void)realize(GraphExpr::base(path(5), "P5").sub_clique(3), 14), SizeLimitError);
}

TEST_CASE("expression accessors") {
    const auto e = GraphExpr::base(path(2), "P2").sub_clique(3);
    CHECK(e.kind() == GraphExpr::Kind::SubClique);
    CHECK(e.clique_size() == 3);
    CHECK(e.child().kind() == GraphExpr::Kind::Base);
    CHECK(e.child().label() == "P2");
    CHECK_THROWS(e.graph());
    CHECK_THROWS(e.child().child());
    CHECK_THROWS_AS(e.sub_clique(0), InvalidOrderError);
}
