#include <doctest.h>

#include "wrco/errors.hpp"
#include "wrco/families.hpp"
#include "wrco/graph.hpp"

using namespace wrco;

TEST_CASE("build and basic accessors") {
    Graph g = Graph::build(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(2) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), input_error);
    CHECK_THROWS_AS(Graph::build(3, {{0, 2}}), input_error);
    CHECK_THROWS_AS(Graph::build(3, {{1, 4}}), input_error);
}

TEST_CASE("complement and induced keep ids") {
    Graph g = Graph::build(4, {{1, 2}, {3, 4}});
    Graph c = g.complement();
    CHECK(c.has_edge(1, 3));
    CHECK(!c.has_edge(1, 2));
    CHECK(c.edge_count() == 4);
    Graph h = g.induced({2, 3, 4});
    CHECK(h.vertices() == std::vector<int>{2, 3, 4});
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(3, 4));
}

TEST_CASE("local complementation toggles within the neighborhood") {
    // path 1-2-3: complementing at 2 adds edge 1-3
    Graph p3 = Graph::build(3, {{1, 2}, {2, 3}});
    Graph lc = p3.local_complement(2);
    CHECK(lc.has_edge(1, 3));
    CHECK(lc.has_edge(1, 2));
    // involution: applying twice restores the graph
    CHECK(lc.local_complement(2) == p3);
}

TEST_CASE("cobipartite partition of the 6-cycle complement") {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    auto pr = cobipartite_partition(c6bar);
    REQUIRE(pr.partition.has_value());
    CHECK(pr.partition->side_x == std::vector<int>{1, 3, 5});
    CHECK(pr.partition->side_y == std::vector<int>{2, 4, 6});
    CHECK(is_valid_cobipartition(c6bar, *pr.partition));
}

TEST_CASE("non-co-bipartite graph yields an odd complement cycle") {
    // C5 is self-complementary; its complement is an odd cycle
    Graph c5 = Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    auto pr = cobipartite_partition(c5);
    CHECK(!pr.partition.has_value());
    REQUIRE(pr.odd_cycle.size() >= 3);
    CHECK(pr.odd_cycle.size() % 2 == 1);
    Graph comp = c5.complement();
    for (size_t i = 0; i < pr.odd_cycle.size(); ++i)
        CHECK(comp.has_edge(pr.odd_cycle[i],
                            pr.odd_cycle[(i + 1) % pr.odd_cycle.size()]));
}

TEST_CASE("clique checks") {
    Graph g = Graph::build(4, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(is_clique(g, {1, 2, 3}));
    CHECK(!is_clique(g, {1, 2, 4}));
    CHECK(is_clique(g, {4}));
    CHECK(is_clique(g, {}));
}

TEST_CASE("graph text round trip") {
    Graph g = Graph::build(4, {{1, 2}, {2, 4}});
    Graph h = parse_graph_text(graph_to_text(g));
    CHECK(g == h);
    Graph sub = g.induced({2, 4}); // ids not 1..n -> relabeling comment on emission
    Graph back = parse_graph_text(graph_to_text(sub));
    CHECK(back == sub); // the original-id comment restores the ids
    CHECK_THROWS_AS(parse_graph_text("2 1\n"), input_error); // missing edge line
    CHECK_THROWS_AS(parse_graph_text("2 1\n1 1\n"), input_error);
    Graph commented = parse_graph_text("# header comment\n2 1\n1 2\n");
    CHECK(commented.edge_count() == 1);
}

TEST_CASE("family generators") {
    Graph g1 = generate_family({FamilyId::Name::G1, 0});
    CHECK(g1.vertex_count() == 7);
    CHECK(is_clique(g1, {1, 2, 3}));
    CHECK(is_clique(g1, {4, 5, 6, 7}));
    Graph w5 = generate_family({FamilyId::Name::W5, 0});
    CHECK(w5.vertex_count() == 6);
    CHECK(w5.degree(6) == 5);
    Graph y6 = generate_family({FamilyId::Name::Y6, 0});
    CHECK(y6.vertex_count() == 7);
    CHECK(y6.edge_count() == 9);
    CHECK_THROWS_AS(generate_family({FamilyId::Name::CoC2k, 2}), input_error);
}
