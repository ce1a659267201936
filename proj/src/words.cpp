#include "wrco/words.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wrco/orientations.hpp"

namespace wrco {

bool alternates(const Word& w, int x, int y) {
    if (x == y) throw input_error("alternates: letters must be distinct");
    bool seen_x = false, seen_y = false;
    int last = 0;
    bool have_last = false;
    bool alt = true;
    for (int c : w.letters) {
        if (c != x && c != y) continue;
        if (c == x) seen_x = true;
        else seen_y = true;
        if (have_last && last == c) alt = false;
        last = c;
        have_last = true;
    }
    if (!seen_x || !seen_y)
        throw input_error("alternates: letter " + std::to_string(seen_x ? y : x) +
                          " absent from the word");
    return alt;
}

Word restriction(const Word& w, const std::vector<int>& s) {
    std::set<int> keep(s.begin(), s.end());
    Word out;
    for (int c : w.letters)
        if (keep.count(c)) out.letters.push_back(c);
    return out;
}

bool represents(const Word& w, const Graph& g) {
    std::set<int> alpha(w.letters.begin(), w.letters.end());
    std::set<int> verts(g.vertices().begin(), g.vertices().end());
    if (alpha != verts) {
        std::ostringstream msg;
        msg << "represents: alphabet mismatch;";
        msg << " missing:";
        for (int v : verts)
            if (!alpha.count(v)) msg << ' ' << v;
        msg << " extra:";
        for (int v : alpha)
            if (!verts.count(v)) msg << ' ' << v;
        throw input_error(msg.str());
    }
    auto vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (alternates(w, vs[i], vs[j]) != g.has_edge(vs[i], vs[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bounded brute force

namespace {

// DFS over k-uniform words with first letter fixed to the minimum vertex
// (rotation quotient). Incremental alternation pruning: appending a letter c
// breaks alternation with x as soon as the previous {c,x}-letter was also c;
// adjacent pairs must stay alternating, non-adjacent pairs must have broken
// by the time both letters are used up.
struct WordSearch {
    const Graph& g;
    int n, k;
    long long budget, nodes = 0;
    bool collect_all;
    std::vector<int> word;                 // letter indices
    std::vector<int> count;                // occurrences so far, by index
    std::vector<std::vector<int>> last;    // last[i][j]: last letter of pair restriction (-1 none)
    std::vector<std::vector<char>> broken; // pair alternation already broken
    std::vector<Word> hits;

    WordSearch(const Graph& gg, int kk, long long b, bool all)
        : g(gg), n(gg.vertex_count()), k(kk), budget(b), collect_all(all) {
        count.assign(n, 0);
        last.assign(n, std::vector<int>(n, -1));
        broken.assign(n, std::vector<char>(n, 0));
    }

    // returns true to stop the whole search (first hit, when !collect_all)
    bool extend() {
        if (static_cast<int>(word.size()) == n * k) {
            Word w;
            for (int i : word) w.letters.push_back(g.id_at(i));
            hits.push_back(std::move(w));
            return !collect_all;
        }
        for (int c = 0; c < n; ++c) {
            if (count[c] == k) continue;
            if (word.empty() && c != 0) break; // first letter = minimum vertex
            if (++nodes > budget) throw budget_error("search_representant: budget exhausted");
            // try appending c
            std::vector<std::pair<int, int>> touched; // pairs whose state changed
            bool ok = true;
            for (int x = 0; x < n && ok; ++x) {
                if (x == c || count[x] == 0) continue;
                if (last[c][x] == c) {
                    if (g.adjacent_idx(c, x)) { ok = false; break; }
                    if (!broken[c][x]) {
                        broken[c][x] = broken[x][c] = 2; // 2 marks "newly broken here"
                        touched.emplace_back(c, x);
                    }
                }
            }
            if (ok) {
                ++count[c];
                // pairs now complete: non-adjacent ones must be broken
                if (count[c] == k) {
                    for (int x = 0; x < n && ok; ++x) {
                        if (x == c || count[x] != k) continue;
                        if (!g.adjacent_idx(c, x) && !broken[c][x]) ok = false;
                    }
                }
                if (ok) {
                    std::vector<int> saved_last(n);
                    for (int x = 0; x < n; ++x) {
                        saved_last[x] = last[c][x];
                        last[c][x] = last[x][c] = c;
                    }
                    word.push_back(c);
                    bool stop = extend();
                    word.pop_back();
                    for (int x = 0; x < n; ++x)
                        last[c][x] = last[x][c] = saved_last[x];
                    if (stop) {
                        --count[c];
                        for (auto [a, b] : touched) broken[a][b] = broken[b][a] = 0;
                        return true;
                    }
                }
                --count[c];
            }
            for (auto [a, b] : touched) broken[a][b] = broken[b][a] = 0;
        }
        return false;
    }
};

std::vector<Word> run_search(const Graph& g, int k, long long budget, bool all) {
    WordSearch s(g, k, budget, all);
    s.extend();
    return std::move(s.hits);
}

} // namespace

RepresentantResult search_representant(const Graph& g, int k_max, long long budget) {
    if (k_max < 1 || k_max > 3)
        throw input_error("search_representant: k_max must be between 1 and 3");
    if (g.vertex_count() > 10)
        throw budget_error("search_representant: graph exceeds cap of 10 vertices");
    RepresentantResult res;
    if (g.vertex_count() == 0) {
        res.status = SearchStatus::none;
        return res;
    }
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Word> hits;
        try {
            hits = run_search(g, k, budget, false);
        } catch (const budget_error&) {
            res.status = SearchStatus::budget;
            return res;
        }
        if (!hits.empty()) {
            res.status = SearchStatus::found;
            res.word = hits.front();
            res.k = k;
            if (!represents(res.word, g))
                throw internal_error("search_representant: pruning disagrees with represents");
            return res;
        }
    }
    res.status = SearchStatus::none;
    return res;
}

std::vector<Word> enumerate_representants(const Graph& g, int k, long long budget) {
    if (k < 1 || k > 3) throw input_error("enumerate_representants: k must be 1..3");
    if (g.vertex_count() > 10)
        throw budget_error("enumerate_representants: graph exceeds cap of 10 vertices");
    auto hits = run_search(g, k, budget, true);
    for (const Word& w : hits)
        if (!represents(w, g))
            throw internal_error("enumerate_representants: pruning disagrees with represents");
    return hits;
}

bool is_permutationally_representable(const Graph& g, long long budget) {
    if (g.vertex_count() > 9)
        throw budget_error("is_permutationally_representable: graph exceeds cap of 9 vertices");
    // Permutational representability coincides with transitive orientability:
    // each permutation imposes a linear order, and alternation across a
    // concatenation of permutations means a consistent relative order, i.e. a
    // transitive orientation. (Cross-checked against the direct brute force
    // over permutation concatenations in the unit tests.)
    auto r = search_transitive(g, budget, 9);
    if (r.status == SearchStatus::budget)
        throw budget_error("is_permutationally_representable: budget exhausted");
    return r.status == SearchStatus::found;
}

std::string word_to_text(const Word& w) {
    std::ostringstream out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out << ' ';
        out << w.letters[i];
    }
    out << '\n';
    return out.str();
}

Word parse_word_text(const std::string& text) {
    std::istringstream in(text);
    Word w;
    int x;
    while (in >> x) w.letters.push_back(x);
    if (!in.eof()) throw input_error("word: non-integer token");
    return w;
}

} // namespace wrco
