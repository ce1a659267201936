#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "wrco/errors.hpp"
#include "wrco/families.hpp"
#include "wrco/words.hpp"

using namespace wrco;

namespace {

Word w(std::vector<int> letters) { return Word{std::move(letters)}; }

Graph neighbourhood_fixture() {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    return c6bar.induced({1, 3, 4, 5}); // closed neighbourhood of vertex 1
}

// direct brute force over concatenations of at most n permutations
bool brute_permutational(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm = g.vertices();
    std::vector<std::vector<int>> perms;
    std::sort(perm.begin(), perm.end());
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // try 1..n concatenated permutations (with repetition)
    for (int count = 1; count <= n; ++count) {
        std::vector<size_t> pick(count, 0);
        while (true) {
            Word word;
            for (size_t ix : pick)
                word.letters.insert(word.letters.end(), perms[ix].begin(),
                                    perms[ix].end());
            if (represents(word, g)) return true;
            int pos = count - 1;
            while (pos >= 0 && ++pick[pos] == perms.size()) pick[pos--] = 0;
            if (pos < 0) break;
        }
    }
    return false;
}

} // namespace

TEST_CASE("alternates") {
    CHECK(alternates(w({1, 2, 1, 2}), 1, 2));
    CHECK(!alternates(w({1, 1, 2}), 1, 2));
    CHECK(alternates(w({1, 2}), 1, 2)); // single occurrence each
    CHECK(alternates(w({3, 1, 2, 1}), 2, 3));
    CHECK_THROWS_AS(alternates(w({1, 2}), 1, 1), input_error);
    CHECK_THROWS_AS(alternates(w({1, 2}), 1, 3), input_error);
}

TEST_CASE("restriction") {
    CHECK(restriction(w({3, 5, 4, 2, 3, 2, 1, 4}), {1, 2}) == w({2, 2, 1}));
    Word full = w({3, 1, 3, 2});
    CHECK(restriction(full, {1, 2, 3}) == full);
    CHECK(restriction(full, {}) == w({}));
}

TEST_CASE("represents") {
    Graph k2 = Graph::build(2, {{1, 2}});
    CHECK(represents(w({1, 2, 1, 2}), k2));
    CHECK(!represents(w({1, 1, 2, 2}), k2));
    CHECK_THROWS_AS(represents(w({1, 1}), k2), input_error);
    CHECK(represents(w({3, 5, 4, 1, 4, 3, 5, 1}), neighbourhood_fixture()));
}

TEST_CASE("hereditariness on the fixture word") {
    Graph h = neighbourhood_fixture();
    Word word = w({3, 5, 4, 1, 4, 3, 5, 1});
    for (std::vector<int> s : {std::vector<int>{1, 3}, {3, 4, 5}, {1, 4, 5}}) {
        CHECK(represents(restriction(word, s), h.induced(s)));
    }
}

TEST_CASE("search_representant on complete and fixture graphs") {
    Graph k3 = Graph::build(3, {{1, 2}, {1, 3}, {2, 3}});
    auto r = search_representant(k3, 1);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.k == 1);
    CHECK(represents(r.word, k3));

    Graph h = neighbourhood_fixture();
    auto rh = search_representant(h, 2);
    REQUIRE(rh.status == SearchStatus::found);
    CHECK(rh.k == 2);
    CHECK(represents(rh.word, h));
    CHECK(rh.word.letters.front() == 1); // rotation-quotient canonical start

    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    CHECK(search_representant(c6bar, 2).status == SearchStatus::none);
    CHECK_THROWS_AS(search_representant(c6bar, 4), input_error);
}

TEST_CASE("search_representant distinguishes budget from none") {
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    auto r = search_representant(c6bar, 2, /*budget=*/5);
    CHECK(r.status == SearchStatus::budget);
}

TEST_CASE("enumerate_representants agrees with the single search") {
    Graph h = neighbourhood_fixture();
    auto all = enumerate_representants(h, 2);
    REQUIRE(!all.empty());
    auto first = search_representant(h, 2);
    CHECK(all.front() == first.word); // lexicographically least
    for (const Word& word : all) CHECK(word.letters.front() == 1);
}

TEST_CASE("permutational representability fixtures") {
    Graph k3 = Graph::build(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(is_permutationally_representable(k3));
    Graph e3 = Graph::build(3, {});
    CHECK(is_permutationally_representable(e3));
    Graph c6bar = generate_family({FamilyId::Name::CoC2k, 3});
    CHECK(!is_permutationally_representable(c6bar));
}

TEST_CASE("permutational representability matches brute force on small graphs") {
    for (int bits = 0; bits < 64; ++bits) {
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j, ++b)
                if (bits >> b & 1) edges.emplace_back(i, j);
        Graph g = Graph::build(4, edges);
        CHECK(is_permutationally_representable(g) == brute_permutational(g));
    }
}

TEST_CASE("word text round trip") {
    Word word = w({3, 5, 4, 1});
    CHECK(parse_word_text(word_to_text(word)) == word);
    CHECK_THROWS_AS(parse_word_text("1 x 2"), input_error);
}
