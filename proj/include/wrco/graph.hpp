#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wrco {

// Simple undirected graph over an arbitrary set of integer vertex ids.
// Induced subgraphs keep their original ids, so ids need not be 1..n.
class Graph {
public:
    Graph() = default;

    // Vertices {1..n} and exactly the given edges (1-based endpoints).
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);
    // Explicit id set (deduplicated and sorted), no edges yet.
    static Graph with_vertices(std::vector<int> ids);

    void add_edge(int u, int v);
    void toggle_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const;
    const std::vector<int>& vertices() const { return ids_; }
    bool has_vertex(int v) const { return index_of(v) >= 0; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;               // sorted ids
    std::vector<std::pair<int, int>> edges() const;        // sorted, u < v

    Graph complement() const;
    Graph induced(const std::vector<int>& s) const;
    Graph local_complement(int v) const;                   // G * v

    bool operator==(const Graph& other) const;

    // Index-based accessors for hot loops.
    int index_of(int id) const;                            // -1 if absent
    int id_at(int index) const { return ids_[index]; }
    bool adjacent_idx(int i, int j) const { return adj_[i][j] != 0; }

private:
    std::vector<int> ids_;                  // sorted, unique
    std::vector<std::vector<char>> adj_;    // dense symmetric, index-based
    int checked_index(int id, const char* who) const;
};

struct CoBipartition {
    std::vector<int> side_x;
    std::vector<int> side_y;
};

struct PartitionResult {
    std::optional<CoBipartition> partition; // set when g is co-bipartite
    std::vector<int> odd_cycle;             // odd cycle of the complement otherwise
};

// Canonical co-bipartition: 2-color each connected component of the
// complement; the color class holding the component's smallest vertex goes to
// side_x. Fails (with an odd-cycle witness) when the complement is not
// bipartite.
PartitionResult cobipartite_partition(const Graph& g);

bool is_clique(const Graph& g, const std::vector<int>& vs);
bool is_valid_cobipartition(const Graph& g, const CoBipartition& p);

// Text format: "n m" header then m lines "u v", 1-based ids, '#' comments.
// Graphs whose ids are not 1..n are relabeled by rank on emission (with a
// comment recording the original ids).
std::string graph_to_text(const Graph& g);
Graph parse_graph_text(const std::string& text);

} // namespace wrco
