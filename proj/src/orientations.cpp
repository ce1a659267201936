#include "wrco/orientations.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "wrco/errors.hpp"

namespace wrco {

// ---------------------------------------------------------------------------
// Orientation basics

Orientation Orientation::from_arcs(const Graph& base,
                                   const std::vector<std::pair<int, int>>& arcs) {
    Orientation o;
    o.base_ = base;
    int n = base.vertex_count();
    o.dir_.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : arcs) {
        int i = base.index_of(u), j = base.index_of(v);
        if (i < 0 || j < 0)
            throw input_error("orientation: arc endpoint not in base graph");
        if (!base.adjacent_idx(i, j))
            throw input_error("orientation: arc (" + std::to_string(u) + "," +
                              std::to_string(v) + ") is not an edge of the base graph");
        if (o.dir_[i][j] || o.dir_[j][i])
            throw input_error("orientation: edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") oriented twice");
        o.dir_[i][j] = 1;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (base.adjacent_idx(i, j) && !o.dir_[i][j] && !o.dir_[j][i])
                throw input_error("orientation: edge (" + std::to_string(base.id_at(i)) +
                                  "," + std::to_string(base.id_at(j)) + ") left unoriented");
    return o;
}

Orientation Orientation::from_vertex_order(const Graph& base, const std::vector<int>& order) {
    int n = base.vertex_count();
    std::vector<int> rank(n, -1);
    for (int r = 0; r < static_cast<int>(order.size()); ++r) {
        int i = base.index_of(order[r]);
        if (i < 0) throw input_error("orientation: order vertex not in base graph");
        rank[i] = r;
    }
    for (int i = 0; i < n; ++i)
        if (rank[i] < 0) throw input_error("orientation: order misses a vertex");
    Orientation o;
    o.base_ = base;
    o.dir_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (base.adjacent_idx(i, j) && rank[i] < rank[j]) o.dir_[i][j] = 1;
    return o;
}

bool Orientation::has_arc(int u, int v) const {
    int i = base_.index_of(u), j = base_.index_of(v);
    if (i < 0 || j < 0) return false;
    return dir_[i][j] != 0;
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
    std::vector<std::pair<int, int>> out;
    int n = base_.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dir_[i][j]) out.emplace_back(base_.id_at(i), base_.id_at(j));
    std::sort(out.begin(), out.end());
    return out;
}

Orientation Orientation::reversed() const {
    Orientation o;
    o.base_ = base_;
    int n = base_.vertex_count();
    o.dir_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dir_[i][j]) o.dir_[j][i] = 1;
    return o;
}

Orientation Orientation::restricted(const std::vector<int>& s) const {
    Graph sub = base_.induced(s);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : sub.edges())
        arcs.emplace_back(has_arc(u, v) ? u : v, has_arc(u, v) ? v : u);
    return from_arcs(sub, arcs);
}

// ---------------------------------------------------------------------------
// Violation search

namespace {

// index-based reachability closure (reach[i][i] = 1)
std::vector<std::vector<char>> closure(const Orientation& o) {
    int n = o.base().vertex_count();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) reach[i][i] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!(o.arc_idx(i, k) || reach[i][k])) continue;
            reach[i][k] = 1;
            for (int j = 0; j < n; ++j)
                if (o.arc_idx(k, j) || reach[k][j]) reach[i][j] = 1;
        }
    // Warshall needs another sweep pattern; redo properly
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) reach[i][j] = (i == j) ? 1 : (o.arc_idx(i, j) ? 1 : 0);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    return reach;
}

// BFS shortest path i -> j following arcs; neighbors in ascending index order
// so reconstruction is deterministic. Returns index path including endpoints,
// empty when unreachable; {i} when i == j.
std::vector<int> bfs_path(const Orientation& o, int i, int j) {
    int n = o.base().vertex_count();
    if (i == j) return {i};
    std::vector<int> parent(n, -2);
    std::queue<int> q;
    parent[i] = -1;
    q.push(i);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w = 0; w < n; ++w) {
            if (!o.arc_idx(u, w) || parent[w] != -2) continue;
            parent[w] = u;
            if (w == j) {
                std::vector<int> path;
                for (int x = j; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(w);
        }
    }
    return {};
}

} // namespace

std::optional<Violation> find_violation(const Orientation& o) {
    const Graph& g = o.base();
    int n = g.vertex_count();
    auto reach = closure(o);

    // cycles first: shortest directed cycle, ties by smallest start vertex
    int best_len = n + 1, best_start = -1;
    for (int v = 0; v < n; ++v) {
        // shortest path from a successor of v back to v, plus the arc
        for (int w = 0; w < n; ++w) {
            if (!o.arc_idx(v, w) || !reach[w][v]) continue;
            auto p = bfs_path(o, w, v);
            int len = static_cast<int>(p.size()); // cycle length
            if (len && len < best_len) {
                best_len = len;
                best_start = v;
            }
        }
        if (best_start == v) break; // cannot improve ties for smaller start
    }
    if (best_start >= 0) {
        // rebuild deterministically
        std::vector<int> cyc;
        for (int w = 0; w < n && cyc.empty(); ++w) {
            if (!o.arc_idx(best_start, w) || !reach[w][best_start]) continue;
            auto p = bfs_path(o, w, best_start);
            if (static_cast<int>(p.size()) == best_len) {
                cyc.push_back(best_start);
                for (size_t t = 0; t + 1 < p.size(); ++t) cyc.push_back(p[t]);
            }
        }
        Violation v;
        v.kind = Violation::Kind::cycle;
        for (int i : cyc) v.vertices.push_back(g.id_at(i));
        return v;
    }

    // shortcuts: a shortcut with shortcutting arc u->w exists iff some
    // non-adjacent pair x,y satisfies u ~> x ~> y ~> w; minimizing
    // d(u,x)+d(x,y)+d(y,w) over all such quadruples gives the shortest one.
    auto dist = [&](int i, int j) -> int {
        if (i == j) return 0;
        if (!reach[i][j]) return -1;
        return static_cast<int>(bfs_path(o, i, j).size()) - 1;
    };
    // precompute pairwise distances
    std::vector<std::vector<int>> D(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) D[i][j] = dist(i, j);
    int bu = -1, bw = -1, bx = -1, by = -1, bl = 1 << 30;
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (!o.arc_idx(u, w)) continue;
            for (int x = 0; x < n; ++x) {
                if (D[u][x] < 0) continue;
                for (int y = 0; y < n; ++y) {
                    if (x == y || g.adjacent_idx(x, y)) continue;
                    if (D[x][y] < 0 || D[y][w] < 0) continue;
                    int len = D[u][x] + D[x][y] + D[y][w];
                    if (len < bl) {
                        bl = len;
                        bu = u; bw = w; bx = x; by = y;
                    }
                }
            }
        }
    if (bu < 0) return std::nullopt;
    auto p1 = bfs_path(o, bu, bx);
    auto p2 = bfs_path(o, bx, by);
    auto p3 = bfs_path(o, by, bw);
    std::vector<int> path(p1.begin(), p1.end());
    path.insert(path.end(), p2.begin() + 1, p2.end());
    path.insert(path.end(), p3.begin() + 1, p3.end());
    Violation v;
    v.kind = Violation::Kind::shortcut;
    for (int i : path) v.vertices.push_back(g.id_at(i));
    return v;
}

// ---------------------------------------------------------------------------
// Semi-transitive oracle

namespace {

struct StSearch {
    const Graph& g;
    int n;
    long long budget, nodes = 0;
    std::vector<int> order;                  // placed vertex indices
    std::vector<char> placed;
    std::vector<std::vector<uint32_t>> reach_stack; // reach bitmasks per depth
    std::optional<std::vector<int>> found;

    StSearch(const Graph& gg, long long b) : g(gg), n(gg.vertex_count()), budget(b) {
        placed.assign(n, 0);
        reach_stack.push_back(std::vector<uint32_t>(n, 0));
    }

    // does placing z (arcs placed-neighbors -> z) keep the prefix violation-free?
    bool check_and_push(int z) {
        auto reach = reach_stack.back(); // copy
        uint32_t predmask = 0;
        for (int u : order)
            if (g.adjacent_idx(u, z)) predmask |= (1u << u);
        reach[z] = (1u << z);
        for (int u : order)
            if (reach[u] & predmask) reach[u] |= (1u << z);
        for (int u : order)
            if (g.adjacent_idx(u, z)) reach[u] |= (1u << z);
        // new violations all use shortcutting arcs u->z: need non-adjacent
        // x,y with u ~> x ~> y ~> z
        for (int u : order) {
            if (!g.adjacent_idx(u, z)) continue;
            uint32_t from_u = reach[u];
            for (int x = 0; x < n; ++x) {
                if (!(from_u & (1u << x))) continue;
                uint32_t from_x = reach[x];
                for (int y = 0; y < n; ++y) {
                    if (y == x || !(from_x & (1u << y))) continue;
                    if (g.adjacent_idx(x, y)) continue;
                    if (reach[y] & (1u << z)) return false;
                }
            }
        }
        reach_stack.push_back(std::move(reach));
        return true;
    }

    bool extend() {
        if (static_cast<int>(order.size()) == n) {
            found = order;
            return true;
        }
        for (int z = 0; z < n; ++z) {
            if (placed[z]) continue;
            if (++nodes > budget)
                throw budget_error("search_semi_transitive: budget exhausted");
            if (!check_and_push(z)) continue;
            placed[z] = 1;
            order.push_back(z);
            if (extend()) return true;
            order.pop_back();
            placed[z] = 0;
            reach_stack.pop_back();
        }
        return false;
    }
};

} // namespace

OrientationResult search_semi_transitive(const Graph& g, long long budget, int cap) {
    if (g.vertex_count() > cap)
        throw budget_error("search_semi_transitive: graph exceeds cap of " +
                           std::to_string(cap) + " vertices");
    if (g.vertex_count() > 30)
        throw budget_error("search_semi_transitive: too many vertices");
    OrientationResult res;
    StSearch search(g, budget);
    try {
        search.extend();
    } catch (const budget_error&) {
        res.status = SearchStatus::budget;
        return res;
    }
    if (!search.found) {
        res.status = SearchStatus::none;
        return res;
    }
    std::vector<int> ids;
    for (int i : *search.found) ids.push_back(g.id_at(i));
    res.status = SearchStatus::found;
    res.orientation = Orientation::from_vertex_order(g, ids);
    if (find_violation(*res.orientation))
        throw internal_error("search_semi_transitive: incremental check disagrees with checker");
    return res;
}

// ---------------------------------------------------------------------------
// Transitive orientation search

namespace {

struct ToSearch {
    const Graph& g;
    int n;
    long long budget, nodes = 0;
    std::vector<std::vector<int>> rel; // 0 unset, 1 arc i->j (only for edges)

    ToSearch(const Graph& gg, long long b) : g(gg), n(gg.vertex_count()), budget(b) {
        rel.assign(n, std::vector<int>(n, 0));
    }

    bool set_arc(int u, int v) {
        if (rel[u][v]) return true;
        if (rel[v][u]) return false;
        rel[u][v] = 1;
        // u->v, v->w  forces u->w; w->u, u->v forces w->v
        for (int w = 0; w < n; ++w) {
            if (rel[v][w]) {
                if (!g.adjacent_idx(u, w)) return false;
                if (!set_arc(u, w)) return false;
            }
            if (rel[w][u]) {
                if (!g.adjacent_idx(w, v)) return false;
                if (!set_arc(w, v)) return false;
            }
        }
        return true;
    }

    bool solve() {
        if (++nodes > budget) throw budget_error("search_transitive: budget exhausted");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (!g.adjacent_idx(i, j) || rel[i][j] || rel[j][i]) continue;
                auto saved = rel;
                if (set_arc(i, j) && solve()) return true;
                rel = saved;
                if (set_arc(j, i) && solve()) return true;
                rel = saved;
                return false;
            }
        return true; // all edges oriented
    }
};

} // namespace

OrientationResult search_transitive(const Graph& g, long long budget, int cap) {
    if (g.vertex_count() > cap)
        throw budget_error("search_transitive: graph exceeds cap of " +
                           std::to_string(cap) + " vertices");
    OrientationResult res;
    ToSearch search(g, budget);
    bool ok;
    try {
        ok = search.solve();
    } catch (const budget_error&) {
        res.status = SearchStatus::budget;
        return res;
    }
    if (!ok) {
        res.status = SearchStatus::none;
        return res;
    }
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (search.rel[i][j]) arcs.emplace_back(g.id_at(i), g.id_at(j));
    res.status = SearchStatus::found;
    res.orientation = Orientation::from_arcs(g, arcs);
    // transitivity assert
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (search.rel[i][j] && search.rel[j][k] && !search.rel[i][k])
                    throw internal_error("search_transitive: closure incomplete");
    return res;
}

// ---------------------------------------------------------------------------
// Constructive orientation from a biorder

std::vector<std::optional<RowTag>> classify_row_vertices(const Biorder& b) {
    std::vector<std::optional<RowTag>> tags(b.endpoints.size());
    for (size_t i = 0; i < b.endpoints.size(); ++i)
        if (b.endpoints[i])
            tags[i] = b.endpoints[i]->wraps ? RowTag::circular : RowTag::linear;
    bool seen_circular = false;
    for (int i : b.row_order) {
        if (!tags[i]) continue;
        if (*tags[i] == RowTag::circular) seen_circular = true;
        else if (seen_circular)
            throw input_error("classify_row_vertices: linear-row vertex after a "
                              "circular-row vertex (biorder is not monotone circular)");
    }
    return tags;
}

Orientation orientation_from_biorder(const Graph& g, const CoBipartition& p,
                                     const Biorder& b) {
    if (!is_valid_cobipartition(g, p))
        throw input_error("orientation_from_biorder: invalid co-bipartition");
    int nr = static_cast<int>(p.side_x.size());
    int nc = static_cast<int>(p.side_y.size());
    BinaryMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            if (g.has_edge(p.side_x[i], p.side_y[j])) m.rows[i].push_back(j);

    auto recomputed = try_biorder(m, b.row_order, b.col_order);
    if (!recomputed)
        throw input_error("orientation_from_biorder: row-not-circular-interval");
    const Biorder& bb = *recomputed;

    bool any_trivial = m.has_trivial_row();
    if (any_trivial) {
        // Case-2 biorder: only all-0 trivial rows, all rows linear, trivial
        // lines placed last on both sides.
        if (m.has_all_one_row())
            throw input_error("orientation_from_biorder: all-1 row (universal vertex "
                              "case is handled by the recognizer)");
        for (int i = 0; i < nr; ++i)
            if (bb.endpoints[i] && bb.endpoints[i]->wraps)
                throw input_error("orientation_from_biorder: wrapped row in a "
                                  "consecutive-ones (Case 2) biorder");
        bool seen_trivial = false;
        for (int i : bb.row_order) {
            if (m.row_trivial(i)) seen_trivial = true;
            else if (seen_trivial)
                throw input_error("orientation_from_biorder: all-0 rows must come last");
        }
        auto cols = m.columns();
        bool seen_empty_col = false;
        for (int j : bb.col_order) {
            if (cols[j].empty()) seen_empty_col = true;
            else if (seen_empty_col)
                throw input_error("orientation_from_biorder: all-0 columns must come last");
        }
    }
    auto check = check_monotone_circular_rows(m, bb);
    if (!check.ok)
        throw input_error("orientation_from_biorder: " + check.violated);

    // the four rules
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> rrank(nr), crank(nc);
    for (int r = 0; r < nr; ++r) rrank[bb.row_order[r]] = r;
    for (int r = 0; r < nc; ++r) crank[bb.col_order[r]] = r;
    for (int a = 0; a < nr; ++a)
        for (int c = 0; c < nr; ++c)
            if (a != c && rrank[a] < rrank[c] && g.has_edge(p.side_x[a], p.side_x[c]))
                arcs.emplace_back(p.side_x[a], p.side_x[c]);
    for (int a = 0; a < nc; ++a)
        for (int c = 0; c < nc; ++c)
            if (a != c && crank[a] < crank[c] && g.has_edge(p.side_y[a], p.side_y[c]))
                arcs.emplace_back(p.side_y[a], p.side_y[c]);
    for (int i = 0; i < nr; ++i) {
        if (!bb.endpoints[i]) continue; // trivial all-0 row: no cross arcs
        const auto& ep = *bb.endpoints[i];
        for (int j : m.rows[i]) {
            if (!ep.wraps) {
                arcs.emplace_back(p.side_x[i], p.side_y[j]); // r_i -> x
            } else if (crank[j] <= ep.e_pos) {
                arcs.emplace_back(p.side_y[j], p.side_x[i]); // x -> r_i for x ⪯ e_i
            } else {
                arcs.emplace_back(p.side_x[i], p.side_y[j]); // r_i -> x for d_i ⪯ x
            }
        }
    }
    Orientation o = Orientation::from_arcs(g, arcs);
    if (auto v = find_violation(o))
        throw internal_error("orientation_from_biorder: constructed orientation has a " +
                             std::string(v->kind == Violation::Kind::cycle ? "cycle"
                                                                           : "shortcut"));
    return o;
}

std::string orientation_to_text(const Orientation& o) {
    const Graph& g = o.base();
    std::ostringstream out;
    int n = g.vertex_count();
    bool canonical_ids = true;
    for (int i = 0; i < n; ++i)
        if (g.id_at(i) != i + 1) canonical_ids = false;
    if (!canonical_ids) {
        out << "# relabeled by rank; original ids:";
        for (int i = 0; i < n; ++i) out << ' ' << g.id_at(i);
        out << '\n';
    }
    auto as = o.arcs();
    out << n << ' ' << as.size() << '\n';
    std::vector<std::pair<int, int>> printable;
    for (auto [u, v] : as)
        printable.emplace_back(canonical_ids ? u : g.index_of(u) + 1,
                               canonical_ids ? v : g.index_of(v) + 1);
    std::sort(printable.begin(), printable.end());
    for (auto [u, v] : printable) out << u << " -> " << v << '\n';
    return out.str();
}

} // namespace wrco
