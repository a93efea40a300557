#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "nbhd/constructions.hpp"
#include "nbhd/dimacs.hpp"
#include "nbhd/errors.hpp"
#include "oracles.hpp"

using namespace nbhd;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

long long binom(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("standard families") {
    Graph k3 = complete_graph(3);
    CHECK(k3.order() == 3);
    CHECK(k3.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);
    CHECK(is_bipartite(k23).bipartite);
    CHECK(k23.adjacent(0, 2));
    CHECK_FALSE(k23.adjacent(2, 3));

    Graph c5 = cycle_graph(5);
    CHECK(c5.size() == 5);
    CHECK(c5.adjacent(4, 0));

    Graph petersen = kneser_graph(5, 2);
    CHECK(petersen.order() == 10);
    CHECK(petersen.size() == 15);
    CHECK(degrees(petersen) == std::vector<std::size_t>(10, 3));
    // {0,1} is vertex 0 and {2,3} is vertex 7 in lexicographic order.
    CHECK(petersen.adjacent(0, 7));
    CHECK_FALSE(petersen.adjacent(0, 1));

    CHECK_THROWS_AS(kneser_graph(3, 2), ParameterError);
    CHECK_THROWS_AS(kneser_graph(4, 0), ParameterError);
    CHECK_THROWS_AS(complete_graph(0), ParameterError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), ParameterError);
    CHECK_THROWS_AS(cycle_graph(2), ParameterError);
}

TEST_CASE("kneser degree is C(n-k, k)") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            Graph g = kneser_graph(n, k);
            CHECK(g.order() == binom(n, k));
            for (Vertex v = 0; v < g.order(); ++v) CHECK(static_cast<long long>(g.degree(v)) == binom(n - k, k));
        }
}

TEST_CASE("mycielskian") {
    Graph c5 = mycielskian(complete_graph(2));
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    CHECK(degrees(c5) == std::vector<std::size_t>(5, 2));
    CHECK(is_connected(c5));

    Graph grotzsch = mycielskian(cycle_graph(5));
    CHECK(grotzsch.order() == 11);
    CHECK(grotzsch.size() == 20);
    CHECK_FALSE(oracle::has_triangle(grotzsch));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Graph g = oracle::random_graph(rng, 8);
        Graph m = mycielskian(g);
        CHECK(is_valid(m));
        CHECK(m.order() == 2 * g.order() + 1);
        CHECK(m.size() == 3 * g.size() + static_cast<std::size_t>(g.order()));
        if (!oracle::has_triangle(g)) CHECK_FALSE(oracle::has_triangle(m));
    }
}

TEST_CASE("triangle-free chromatic family") {
    CHECK(triangle_free_chromatic(2) == complete_graph(2));
    Graph t3 = triangle_free_chromatic(3);
    CHECK(t3.order() == 5);
    CHECK(degrees(t3) == std::vector<std::size_t>(5, 2));
    Graph t4 = triangle_free_chromatic(4);
    CHECK(t4.order() == 11);
    CHECK_FALSE(oracle::has_triangle(t4));
    CHECK(triangle_free_chromatic(5).order() == 23);
    CHECK_THROWS_AS(triangle_free_chromatic(1), ParameterError);
}

TEST_CASE("gadget") {
    Gadget g = build_gadget({complete_graph(3), 0, complete_graph(3), 0});
    CHECK(g.graph.order() == 7);
    CHECK(g.graph.size() == 8);
    CHECK(g.bridge == 6);
    CHECK(g.graph.degree(g.bridge) == 2);
    CHECK(g.graph.adjacent(0, 6));
    CHECK(g.graph.adjacent(3, 6));
    CHECK(is_connected(g.graph));

    Gadget h = build_gadget({cycle_graph(5), 2, complete_graph(3), 1});
    CHECK(h.graph.order() == 9);
    CHECK(h.graph.size() == 10);
    CHECK(h.graph.neighbors(h.bridge)[0] == 2);
    CHECK(h.graph.neighbors(h.bridge)[1] == h.map_k(1));

    CHECK_THROWS_AS(build_gadget({complete_graph(3), 3, complete_graph(3), 0}), ParameterError);
    CHECK_THROWS_AS(build_gadget({complete_graph(3), 0, complete_graph(3), -1}), ParameterError);

    // Size and edge count over corpus pairs.
    auto corpus = oracle::corpus();
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            const Graph& hg = corpus[a].second;
            const Graph& kg = corpus[b].second;
            Gadget gd = build_gadget({hg, 0, kg, kg.order() - 1});
            CHECK(is_valid(gd.graph));
            CHECK(gd.graph.order() == hg.order() + kg.order() + 1);
            CHECK(gd.graph.size() == hg.size() + kg.size() + 2);
            CHECK(gd.graph.degree(gd.bridge) == 2);
        }
}

TEST_CASE("corollary graph") {
    CorollaryGraph a = build_corollary_graph({2, 2, 3, 3});
    CHECK(a.block.order() == 12);
    CHECK(a.graph.order() == 25);
    CHECK(a.graph.degree(a.bridge) == 2);
    CHECK(a.graph.neighbors(a.bridge)[0] == a.s_first);
    CHECK(a.graph.neighbors(a.bridge)[1] == a.s_second);
    CHECK(a.s_second == 12);
    CHECK(a.left == std::vector<Vertex>{3, 4});
    CHECK(a.right == std::vector<Vertex>{5, 6});
    CHECK(a.clique == std::vector<Vertex>{0, 1, 2});
    // a-c and b-d attachments.
    CHECK(a.block.adjacent(0, 3));
    CHECK(a.block.adjacent(1, 7));
    CHECK(is_connected(a.graph));

    CorollaryGraph b = build_corollary_graph({2, 3, 3, 4});
    CHECK(b.block.order() == 19);
    CHECK(b.graph.order() == 39);

    CHECK(build_corollary_graph({2, 2, 3, 5}).graph.order() == 61);

    CHECK_THROWS_AS(build_corollary_graph({1, 1, 1, 3}), ParameterError);
    CHECK_THROWS_AS(build_corollary_graph({1, 1, 4, 3}), ParameterError);
    CHECK_THROWS_AS(build_corollary_graph({1, 1, 2, 2}), ParameterError);
    CHECK_THROWS_AS(build_corollary_graph({0, 1, 2, 3}), ParameterError);
}

TEST_CASE("bipartiteness and connectivity") {
    CHECK(is_bipartite(cycle_graph(4)).bipartite);
    CHECK(is_bipartite(complete_bipartite(3, 3)).bipartite);

    auto c5 = is_bipartite(cycle_graph(5));
    REQUIRE_FALSE(c5.bipartite);
    CHECK(c5.odd_walk.size() == 5);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_graph(rng, 9);
        auto r = is_bipartite(g);
        if (r.bipartite) {
            for (auto [u, v] : g.edges()) CHECK(r.sides[u] != r.sides[v]);
        } else {
            const auto& w = r.odd_walk;
            CHECK(w.size() % 2 == 1);
            for (std::size_t j = 0; j < w.size(); ++j) CHECK(g.adjacent(w[j], w[(j + 1) % w.size()]));
        }
    }

    CHECK(is_connected(complete_graph(3)));
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(disjoint_union(complete_graph(3), complete_graph(3))));
    CHECK(is_connected(build_gadget({complete_graph(3), 0, complete_graph(3), 0}).graph));
}

TEST_CASE("biconnected blocks") {
    Gadget g = build_gadget({complete_graph(3), 0, cycle_graph(5), 0});
    auto blocks = biconnected_blocks(g.graph);
    CHECK(blocks == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 8}, {3, 4, 5, 6, 7}, {3, 8}});

    Graph lone = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
    CHECK(biconnected_blocks(lone) == std::vector<std::vector<Vertex>>{{0, 1}, {2}});

    // Blocks cover every edge exactly once.
    for (const auto& [name, graph] : oracle::corpus()) {
        std::size_t covered = 0;
        for (const auto& b : biconnected_blocks(graph)) covered += induced_subgraph(graph, b).size();
        CHECK_MESSAGE(covered == graph.size(), name);
    }
}

TEST_CASE("every constructed graph is valid") {
    for (const auto& [name, g] : oracle::corpus()) CHECK_MESSAGE(is_valid(g), name);
}

TEST_CASE("graph construction rejects bad edges") {
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{0, 3}}), ParameterError);
    CHECK_THROWS_AS(Graph::from_edges(3, std::vector<Edge>{{1, 1}}), ParameterError);
    Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
}

TEST_CASE("DIMACS reading") {
    std::istringstream k3("c triangle\np edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
    CHECK(read_dimacs(k3) == complete_graph(3));

    std::istringstream bad_range("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_AS(read_dimacs(bad_range), ParseError);

    std::istringstream bad_header("p graph 3\n");
    CHECK_THROWS_AS(read_dimacs(bad_header), ParseError);

    std::istringstream no_header("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(no_header), ParseError);

    std::istringstream loop("p edge 2 1\ne 1 1\n");
    CHECK_THROWS_AS(read_dimacs(loop), ParseError);

    std::istringstream dup("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n");
    std::vector<std::string> warnings;
    Graph g = read_dimacs(dup, &warnings);
    CHECK(g.size() == 2);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("DIMACS canonical round trip") {
    for (const auto& [name, g] : oracle::corpus()) {
        std::ostringstream first;
        write_dimacs(first, g, name);
        std::istringstream in(first.str());
        Graph back = read_dimacs(in);
        CHECK_MESSAGE(back == g, name);
        std::ostringstream second;
        write_dimacs(second, back, name);
        CHECK(second.str() == first.str());
    }

    std::istringstream messy("p edge 3 3\ne 3 2\ne 1 3\ne 2 1\n");
    std::ostringstream canon;
    write_dimacs(canon, read_dimacs(messy));
    CHECK(canon.str() == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}
