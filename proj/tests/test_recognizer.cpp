#include <doctest.h>

#include <algorithm>

#include "wrco/errors.hpp"
#include "wrco/families.hpp"
#include "wrco/isomorphism.hpp"
#include "wrco/recognizer.hpp"

using namespace wrco;

TEST_CASE("biadjacency and cg round trips") {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    auto pr = cobipartite_partition(c6bar);
    REQUIRE(pr.partition.has_value());
    BinaryMatrix m = biadjacency(c6bar, *pr.partition);
    CHECK(m == BinaryMatrix::dense({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));

    auto [g, p] = cg(m);
    CHECK(biadjacency(g, p) == m);
    CHECK(is_isomorphic(g, c6bar));

    BinaryMatrix za = generate_pattern({PatternId::Name::ZA, 0});
    auto [gza, pza] = cg(za);
    CHECK(biadjacency(gza, pza) == za);
}

TEST_CASE("cg of a matrix and of its transpose are isomorphic") {
    for (uint32_t bits : {0x1b3u, 0x0f0u, 0x123u, 0x1ffu}) {
        BinaryMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (bits >> (r * 3 + c) & 1) m.rows[r].push_back(c);
        CHECK(is_isomorphic(cg(m).first, cg(transpose(m)).first));
    }
}

TEST_CASE("recognize fixtures") {
    Verdict za = recognize(generate_gs({GsMember::Name::CG_ZA, 0}));
    CHECK(!za.semi_transitive);
    REQUIRE(za.certificate.has_value());
    CHECK(za.certificate->family == "CG(ZA)");
    CHECK(za.certificate->vertices.size() == 8);

    Verdict c6 = recognize(generate_family({FamilyId::Name::CoC2k, 3}));
    CHECK(c6.semi_transitive);
    REQUIRE(c6.witness.has_value());
    CHECK(!find_violation(*c6.witness).has_value());
    CHECK(c6.notes.find("case-1") != std::string::npos);

    Verdict mi3 = recognize(generate_gs({GsMember::Name::CG_MIkStar, 3}));
    CHECK(!mi3.semi_transitive);
    REQUIRE(mi3.certificate.has_value());
    CHECK(mi3.certificate->family == "CG(MIkStar)");
    CHECK(mi3.certificate->k == 3);

    Graph c5 = Graph::build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK_THROWS_AS(recognize(c5), input_error);
}

TEST_CASE("witness construction covers case 2 and case 3") {
    // case 2: an all-0 row and an all-0 column
    BinaryMatrix m2 = BinaryMatrix::dense({{1, 1, 0}, {0, 1, 0}, {0, 0, 0}});
    auto [g2, p2] = cg(m2);
    std::string notes;
    auto w2 = witness_orientation(g2, p2, 200000000, &notes);
    REQUIRE(w2.has_value());
    CHECK(!find_violation(*w2).has_value());
    CHECK(notes.find("case-2") != std::string::npos);

    // case 3: an all-1 row and an all-1 column; the universal vertex is a source
    BinaryMatrix m3 = BinaryMatrix::dense({{1, 1}, {1, 0}});
    auto [g3, p3] = cg(m3);
    auto w3 = witness_orientation(g3, p3, 200000000, &notes);
    REQUIRE(w3.has_value());
    CHECK(!find_violation(*w3).has_value());
    CHECK(notes.find("case-3") != std::string::npos);
    for (int u : {2, 3, 4}) CHECK(w3->has_arc(1, u));
}

TEST_CASE("decision is partition invariant") {
    Graph g = cg(BinaryMatrix::dense({{1, 0}, {1, 1}})).first;
    bool reference = recognize(g).semi_transitive;
    int n = g.vertex_count();
    int partitions_checked = 0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        CoBipartition p;
        for (int v = 1; v <= n; ++v)
            ((mask >> (v - 1)) & 1 ? p.side_x : p.side_y).push_back(v);
        if (!is_valid_cobipartition(g, p)) continue;
        ++partitions_checked;
        BinaryMatrix m = biadjacency(g, p);
        CHECK(is_cco(m).cco == reference);
    }
    CHECK(partitions_checked >= 2);
}

TEST_CASE("generate_gs members") {
    Graph comi3 = generate_gs({GsMember::Name::CG_coMIkStar, 3});
    // join of the 6-cycle complement with a single universal vertex
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    std::vector<std::pair<int, int>> edges = c6bar.edges();
    for (int v = 1; v <= 6; ++v) edges.emplace_back(v, 7);
    CHECK(is_isomorphic(comi3, Graph::build(7, edges)));
    CHECK_THROWS_AS(generate_gs({GsMember::Name::CG_MIkStar, 2}), input_error);
    CHECK(parse_gs_name("CG(ZB)", 0).name == GsMember::Name::CG_ZB);
    CHECK_THROWS_AS(parse_gs_name("nope", 0), input_error);
}

TEST_CASE("hereditariness of positive decisions") {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    REQUIRE(recognize(c6bar).semi_transitive);
    for (int drop = 1; drop <= 6; ++drop) {
        std::vector<int> rest;
        for (int v = 1; v <= 6; ++v)
            if (v != drop) rest.push_back(v);
        CHECK(recognize(c6bar.induced(rest)).semi_transitive);
    }
}

TEST_CASE("is_cobipartite_permutation fixtures") {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    PermutationCheck pc = is_cobipartite_permutation(c6bar);
    CHECK(!pc.permutation);
    REQUIRE(pc.certificate.has_value());
    CHECK(pc.certificate->family == "CoC2k");
    CHECK(pc.certificate->k == 3);
    CHECK(pc.certificate->vertices.size() == 6);

    Graph minus = c6bar.induced({1, 2, 3, 4, 5});
    PermutationCheck pm = is_cobipartite_permutation(minus);
    CHECK(pm.permutation);
    REQUIRE(pm.witness.has_value());
    CHECK(represents(*pm.witness, minus));

    Graph g1 = generate_family({FamilyId::Name::G1, 0});
    PermutationCheck pg = is_cobipartite_permutation(g1);
    CHECK(!pg.permutation);
    REQUIRE(pg.certificate.has_value());
    CHECK(pg.certificate->family == "G1");
}

TEST_CASE("verdict text output") {
    Verdict za = recognize(generate_gs({GsMember::Name::CG_ZA, 0}));
    std::string text = verdict_to_text(za);
    CHECK(text.rfind("NOT-SEMI-TRANSITIVE\n", 0) == 0);
    CHECK(text.find("CERTIFICATE family=CG(ZA) k=0 vertices=1,2,3,4,5,6,7,8") !=
          std::string::npos);

    Verdict c6 = recognize(generate_family({FamilyId::Name::CoC2k, 3}));
    std::string pos = verdict_to_text(c6);
    CHECK(pos.rfind("SEMI-TRANSITIVE\n", 0) == 0);
    CHECK(pos.find("WITNESS\n") != std::string::npos);
    CHECK(pos.find("->") != std::string::npos);
}
