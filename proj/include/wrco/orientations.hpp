#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrco/binmatrix.hpp"
#include "wrco/graph.hpp"

namespace wrco {

// Acyclic-or-not arc assignment over all edges of a base graph.
class Orientation {
public:
    // arcs must cover every edge of base exactly once, directed.
    static Orientation from_arcs(const Graph& base,
                                 const std::vector<std::pair<int, int>>& arcs);
    // Orient every edge u->v when order(u) < order(v) for a vertex ranking.
    static Orientation from_vertex_order(const Graph& base, const std::vector<int>& order);

    const Graph& base() const { return base_; }
    bool has_arc(int u, int v) const;
    std::vector<std::pair<int, int>> arcs() const; // sorted by (tail, head)
    Orientation reversed() const;
    Orientation restricted(const std::vector<int>& s) const;

    bool arc_idx(int i, int j) const { return dir_[i][j] != 0; }

private:
    Graph base_;
    std::vector<std::vector<char>> dir_; // dir_[i][j] = arc i->j (index based)
};

struct Violation {
    enum class Kind { cycle, shortcut };
    Kind kind;
    // cycle: the directed cycle; shortcut: the path v_0..v_k (arc v_0->v_k is
    // the shortcutting edge).
    std::vector<int> vertices;
};

// none iff o is semi-transitive. Deterministic: shortest violation first
// (cycles before shortcuts), ties broken by lexicographic vertex order.
std::optional<Violation> find_violation(const Orientation& o);

struct OrientationResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Orientation> orientation;
};

// Exhaustive semi-transitivity oracle: backtracking over vertex-order
// prefixes (every acyclic orientation arises from a vertex order) with an
// incremental violation check. Authoritative none when the search completes.
OrientationResult search_semi_transitive(const Graph& g, long long budget = 200000000,
                                         int cap = 12);

// Transitive orientation (comparability) search: edge-by-edge backtracking
// with transitivity closure propagation.
OrientationResult search_transitive(const Graph& g, long long budget = 200000000,
                                    int cap = 12);

// The constructive orientation from a biorder of M(g, p) (rows = side_x,
// columns = side_y):
//   within X by ⪯_r; within Y by ⪯_c;
//   linear-row vertex r_i (d_i ⪯ e_i): r_i -> x for every column x in [d_i,e_i];
//   circular-row vertex (e_i ≺ d_i):   x -> r_i for x ⪯ e_i, r_i -> x for d_i ⪯ x.
// Accepts a monotone circular biorder with no trivial rows (Case 1), or a
// consecutive-ones biorder whose all-0 rows and all-0 columns come last
// (Case 2). Invalid biorders raise input_error naming the violated condition.
Orientation orientation_from_biorder(const Graph& g, const CoBipartition& p,
                                     const Biorder& b);

enum class RowTag { linear, circular };
// Tags every nontrivial row; asserts linear-row vertices precede circular-row
// vertices along ⪯_r (input_error otherwise). Indexed by original row index;
// nullopt for trivial rows.
std::vector<std::optional<RowTag>> classify_row_vertices(const Biorder& b);

// Text format: graph header then one line "u -> v" per arc, sorted.
std::string orientation_to_text(const Orientation& o);

} // namespace wrco
