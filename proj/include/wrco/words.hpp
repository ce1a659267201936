#pragma once

#include <string>
#include <vector>

#include "wrco/errors.hpp"
#include "wrco/graph.hpp"

namespace wrco {

// Finite sequence of vertex ids.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
};

// True iff the restriction of w to {x, y} strictly alternates. x and y must
// be distinct letters of w.
bool alternates(const Word& w, int x, int y);

// Subsequence keeping exactly the letters in s.
Word restriction(const Word& w, const std::vector<int>& s);

// True iff the alternation relation of w equals E(g) exactly. The alphabet of
// w must equal V(g) (input_error listing missing/extra letters otherwise).
bool represents(const Word& w, const Graph& g);

struct RepresentantResult {
    SearchStatus status = SearchStatus::none;
    Word word;  // set when status == found
    int k = 0;  // uniformity of the witness
};

// k-uniform representant with minimal k <= k_max, or authoritative none when
// the exhaustive search completed. The search quotients by rotation (the
// first letter is fixed to the minimum vertex) and returns the
// lexicographically least witness among those. |V(g)| <= cap of 10 and
// k_max <= 3.
RepresentantResult search_representant(const Graph& g, int k_max = 3,
                                       long long budget = 200000000);

// All k-uniform representants whose first letter is the minimum vertex, in
// lexicographic order (one orbit representative per rotation class up to the
// k aligned rotations). Used by the uniqueness sweeps.
std::vector<Word> enumerate_representants(const Graph& g, int k,
                                          long long budget = 200000000);

// True iff some concatenation of at most |V(g)| permutations of V(g)
// represents g; equivalently, g has a transitive orientation. |V(g)| <= cap
// of 9.
bool is_permutationally_representable(const Graph& g, long long budget = 200000000);

// Text format: whitespace-separated vertex ids on one line.
std::string word_to_text(const Word& w);
Word parse_word_text(const std::string& text);

} // namespace wrco
