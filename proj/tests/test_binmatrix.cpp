#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "wrco/binmatrix.hpp"
#include "wrco/errors.hpp"

using namespace wrco;

TEST_CASE("dense construction and accessors") {
    BinaryMatrix m = BinaryMatrix::dense({{1, 0, 1}, {0, 0, 0}});
    CHECK(m.row_count == 2);
    CHECK(m.col_count == 3);
    CHECK(m.at(0, 0));
    CHECK(!m.at(0, 1));
    CHECK(m.ones() == 2);
    CHECK(m.size() == 2 + 3 + 2);
    CHECK(m.row_trivial(1));
    CHECK(!m.row_trivial(0));
    CHECK(m.has_all_zero_row());
    CHECK(!m.has_all_one_row());
}

TEST_CASE("transpose, complement, row complement, M*") {
    BinaryMatrix m = BinaryMatrix::dense({{1, 0}, {1, 1}});
    BinaryMatrix t = transpose(m);
    CHECK(t.at(0, 0));
    CHECK(t.at(0, 1));
    CHECK(!t.at(1, 0));
    CHECK(complement(m) == BinaryMatrix::dense({{0, 1}, {0, 0}}));
    CHECK(row_complement(m, {true, false}) == BinaryMatrix::dense({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(row_complement(m, {true}), input_error);
    BinaryMatrix star = add_empty_column(m);
    CHECK(star.col_count == 3);
    CHECK(star.ones() == m.ones());
}

TEST_CASE("pattern matrices are frozen") {
    CHECK(generate_pattern({PatternId::Name::ZA, 0}) ==
          BinaryMatrix::dense({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 0, 0}}));
    CHECK(generate_pattern({PatternId::Name::ZC, 0}) ==
          BinaryMatrix::dense({{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}}));
    BinaryMatrix mi3 = generate_pattern({PatternId::Name::MIk, 3});
    CHECK(mi3 == BinaryMatrix::dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
    BinaryMatrix mi3s = generate_pattern({PatternId::Name::MIkStar, 3});
    CHECK(mi3s.col_count == 4);
    CHECK(generate_pattern({PatternId::Name::coZAT, 0}) ==
          transpose(generate_pattern({PatternId::Name::coZA, 0})));
}

TEST_CASE("transpose-suffixed patterns really are transposes") {
    using P = PatternId::Name;
    CHECK(generate_pattern({P::ZAT, 0}) == transpose(generate_pattern({P::ZA, 0})));
    CHECK(generate_pattern({P::coZA, 0}) == complement(generate_pattern({P::ZA, 0})));
    CHECK(generate_pattern({P::coMIkStarT, 4}) ==
          transpose(complement(generate_pattern({P::MIkStar, 4}))));
    CHECK(fcco_finite().size() == 12);
    CHECK(parse_pattern_name("ZB", 0).name == P::ZB);
    CHECK(pattern_name({P::MIkStar, 5}) == "MIkStar(5)");
}

TEST_CASE("bracelets") {
    CHECK(bracelets(3) == std::vector<std::string>{"000", "111"});
    CHECK(bracelets(4) == std::vector<std::string>{"0000", "0001", "0011", "0101",
                                                   "0111", "1111"});
    CHECK_THROWS_AS(bracelets(2), input_error);
    CHECK_THROWS_AS(bracelets(30), budget_error);
}

TEST_CASE("consecutive and circular ones") {
    BinaryMatrix mi3 = generate_pattern({PatternId::Name::MIk, 3});
    CHECK(!has_consecutive_ones(mi3).has_value());
    auto circ = has_circular_ones(mi3);
    REQUIRE(circ.has_value());
    CHECK(verify_circular_ones(mi3, *circ));

    BinaryMatrix mi3s = generate_pattern({PatternId::Name::MIkStar, 3});
    CHECK(!has_circular_ones(mi3s).has_value());

    BinaryMatrix scrambled = BinaryMatrix::dense({{1, 0, 1}, {0, 1, 1}});
    auto c1 = has_consecutive_ones(scrambled);
    REQUIRE(c1.has_value());
    CHECK(verify_consecutive_ones(scrambled, *c1));
}

TEST_CASE("configuration containment") {
    BinaryMatrix za = generate_pattern({PatternId::Name::ZA, 0});
    auto hit = contains_configuration(za, za);
    REQUIRE(hit.has_value());
    CHECK(hit->first.size() == 4);
    CHECK(hit->second.size() == 4);
    BinaryMatrix id3 = BinaryMatrix::dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(!contains_configuration(id3, za).has_value());

    auto mh = find_mik_star(generate_pattern({PatternId::Name::MIkStar, 3}));
    CHECK(mh.status == MikStarHit::Status::found);
    CHECK(mh.pattern.k == 3);
}

TEST_CASE("biorders and monotone circular checks") {
    BinaryMatrix m = BinaryMatrix::dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto b = try_biorder(m, {0, 1, 2}, {0, 1, 2});
    REQUIRE(b.has_value());
    CHECK(!b->endpoints[0]->wraps);
    CHECK(b->endpoints[2]->wraps); // {0,2} wraps in the identity order
    CHECK(check_monotone_circular(m, *b).ok);
    CHECK_THROWS_AS(try_biorder(m, {0, 0, 2}, {0, 1, 2}), input_error);

    auto found = search_monotone_circular(m);
    CHECK(found.has_value());

    BinaryMatrix za = generate_pattern({PatternId::Name::ZA, 0});
    CHECK_THROWS_AS(check_monotone_circular(BinaryMatrix::dense({{0, 0}}), Biorder{}),
                    input_error);
    (void)za;
}

TEST_CASE("is_cco fixtures") {
    BinaryMatrix id3 = BinaryMatrix::dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(is_cco(id3).cco);
    CcoResult za = is_cco(generate_pattern({PatternId::Name::ZA, 0}));
    CHECK(!za.cco);
    CcoResult mi3s = is_cco(generate_pattern({PatternId::Name::MIkStar, 3}));
    CHECK(!mi3s.cco);
}

TEST_CASE("search_cco_biorder fixtures") {
    BinaryMatrix id3 = BinaryMatrix::dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    auto r = search_cco_biorder(id3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(valid_cco_biorder(id3, *r.biorder));
    CHECK(search_cco_biorder(generate_pattern({PatternId::Name::ZA, 0})).status ==
          SearchStatus::none);
    BinaryMatrix big(8, 8);
    CHECK(search_cco_biorder(big).status == SearchStatus::budget);
}

TEST_CASE("matrix text round trip") {
    BinaryMatrix m = BinaryMatrix::dense({{1, 0, 1}, {0, 0, 0}, {0, 1, 0}});
    std::string text = matrix_to_text(m);
    CHECK(parse_matrix_text(text) == m);
    CHECK(text == "3 3\n1 3\n\n2\n");
    CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), input_error); // column out of range
}
