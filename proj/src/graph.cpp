#include "wrco/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "wrco/errors.hpp"

namespace wrco {

Graph Graph::with_vertices(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Graph g;
    g.ids_ = std::move(ids);
    g.adj_.assign(g.ids_.size(), std::vector<char>(g.ids_.size(), 0));
    return g;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw input_error("build_graph: negative vertex count");
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    Graph g = with_vertices(std::move(ids));
    for (auto [u, v] : edges) {
        if (u == v)
            throw input_error("build_graph: loop at vertex " + std::to_string(u));
        if (u < 1 || u > n || v < 1 || v > n)
            throw input_error("build_graph: edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ") out of range 1.." + std::to_string(n));
        g.add_edge(u, v);
    }
    return g;
}

int Graph::index_of(int id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

int Graph::checked_index(int id, const char* who) const {
    int i = index_of(id);
    if (i < 0)
        throw input_error(std::string(who) + ": unknown vertex " + std::to_string(id));
    return i;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw input_error("add_edge: loop at vertex " + std::to_string(u));
    int i = checked_index(u, "add_edge");
    int j = checked_index(v, "add_edge");
    adj_[i][j] = adj_[j][i] = 1;
}

void Graph::toggle_edge(int u, int v) {
    if (u == v) throw input_error("toggle_edge: loop at vertex " + std::to_string(u));
    int i = checked_index(u, "toggle_edge");
    int j = checked_index(v, "toggle_edge");
    adj_[i][j] = adj_[j][i] = adj_[i][j] ? 0 : 1;
}

bool Graph::has_edge(int u, int v) const {
    int i = index_of(u), j = index_of(v);
    if (i < 0 || j < 0 || i == j) return false;
    return adj_[i][j] != 0;
}

int Graph::edge_count() const {
    int n = vertex_count(), c = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c += adj_[i][j];
    return c;
}

int Graph::degree(int v) const {
    int i = checked_index(v, "degree");
    int d = 0;
    for (char a : adj_[i]) d += a;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    int i = checked_index(v, "neighbors");
    std::vector<int> out;
    for (int j = 0; j < vertex_count(); ++j)
        if (adj_[i][j]) out.push_back(ids_[j]);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    int n = vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj_[i][j]) out.emplace_back(ids_[i], ids_[j]);
    return out;
}

Graph Graph::complement() const {
    Graph g = *this;
    int n = vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g.adj_[i][j] = (i != j && !adj_[i][j]) ? 1 : 0;
    return g;
}

Graph Graph::induced(const std::vector<int>& s) const {
    Graph g = with_vertices(s);
    for (int id : g.ids_)
        if (index_of(id) < 0)
            throw input_error("induced_subgraph: unknown vertex " + std::to_string(id));
    int k = g.vertex_count();
    for (int a = 0; a < k; ++a) {
        int ia = index_of(g.ids_[a]);
        for (int b = a + 1; b < k; ++b) {
            int ib = index_of(g.ids_[b]);
            if (adj_[ia][ib]) g.adj_[a][b] = g.adj_[b][a] = 1;
        }
    }
    return g;
}

Graph Graph::local_complement(int v) const {
    int i = checked_index(v, "local_complement");
    Graph g = *this;
    int n = vertex_count();
    std::vector<int> nb;
    for (int j = 0; j < n; ++j)
        if (adj_[i][j]) nb.push_back(j);
    for (size_t a = 0; a < nb.size(); ++a)
        for (size_t b = a + 1; b < nb.size(); ++b) {
            int x = nb[a], y = nb[b];
            g.adj_[x][y] = g.adj_[y][x] = g.adj_[x][y] ? 0 : 1;
        }
    return g;
}

bool Graph::operator==(const Graph& other) const {
    return ids_ == other.ids_ && adj_ == other.adj_;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b])) return false;
    return true;
}

bool is_valid_cobipartition(const Graph& g, const CoBipartition& p) {
    std::set<int> all(p.side_x.begin(), p.side_x.end());
    for (int v : p.side_y)
        if (!all.insert(v).second) return false;
    if (static_cast<int>(all.size()) != g.vertex_count()) return false;
    for (int v : all)
        if (!g.has_vertex(v)) return false;
    return is_clique(g, p.side_x) && is_clique(g, p.side_y);
}

PartitionResult cobipartite_partition(const Graph& g) {
    Graph h = g.complement();
    int n = h.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1);
    PartitionResult res;
    CoBipartition p;
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        // BFS 2-coloring of this complement component; smallest vertex first,
        // its color class goes to side_x.
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w = 0; w < n; ++w) {
                if (!h.adjacent_idx(u, w)) continue;
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    q.push(w);
                } else if (color[w] == color[u]) {
                    // Odd cycle: walk both vertices up to their common ancestor.
                    std::vector<int> pu, pw;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                    // find deepest common vertex
                    std::set<int> su(pu.begin(), pu.end());
                    int meet = -1;
                    for (int x : pw)
                        if (su.count(x)) { meet = x; break; }
                    std::vector<int> cyc;
                    for (int x : pu) {
                        cyc.push_back(h.id_at(x));
                        if (x == meet) break;
                    }
                    std::vector<int> tail;
                    for (int x : pw) {
                        if (x == meet) break;
                        tail.push_back(h.id_at(x));
                    }
                    std::reverse(tail.begin(), tail.end());
                    cyc.insert(cyc.end(), tail.begin(), tail.end());
                    res.odd_cycle = cyc;
                    return res;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        (color[i] == 0 ? p.side_x : p.side_y).push_back(h.id_at(i));
    res.partition = std::move(p);
    return res;
}

std::string graph_to_text(const Graph& g) {
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
    auto es = g.edges();
    out << n << ' ' << es.size() << '\n';
    for (auto [u, v] : es) {
        int a = canonical_ids ? u : g.index_of(u) + 1;
        int b = canonical_ids ? v : g.index_of(v) + 1;
        out << a << ' ' << b << '\n';
    }
    return out.str();
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> original_ids;
    const std::string id_marker = "original ids:";
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            // honor the relabeling comment emitted by graph_to_text so that
            // graphs with non-contiguous ids round-trip
            auto mark = line.find(id_marker, hash);
            if (mark != std::string::npos) {
                std::istringstream ids(line.substr(mark + id_marker.size()));
                int v;
                while (ids >> v) original_ids.push_back(v);
            }
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        int a, b;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b)) throw input_error("graph text: expected two integers per line");
        if (n < 0) {
            n = a;
            m = b;
        } else {
            edges.emplace_back(a, b);
        }
    }
    if (n < 0) throw input_error("graph text: missing header line \"n m\"");
    if (static_cast<int>(edges.size()) != m)
        throw input_error("graph text: header promises " + std::to_string(m) +
                          " edges, found " + std::to_string(edges.size()));
    Graph g = Graph::build(n, edges);
    if (original_ids.empty()) return g;
    if (static_cast<int>(original_ids.size()) != n)
        throw input_error("graph text: original-id comment lists " +
                          std::to_string(original_ids.size()) + " ids for " +
                          std::to_string(n) + " vertices");
    Graph relabeled = Graph::with_vertices(original_ids);
    if (relabeled.vertex_count() != n)
        throw input_error("graph text: original ids are not distinct");
    for (auto [a, b] : edges) relabeled.add_edge(original_ids[a - 1], original_ids[b - 1]);
    return relabeled;
}

} // namespace wrco
