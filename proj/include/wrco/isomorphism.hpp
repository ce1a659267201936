#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wrco/graph.hpp"

namespace wrco {

// Injective map pattern -> host preserving adjacency and non-adjacency
// (induced embedding). Deterministic: pattern vertices are processed in
// ascending id order and host candidates tried in ascending id order, so the
// returned image tuple is lexicographically first. Backtracking with degree
// pruning; patterns are capped (default 16 vertices).
//
// Returns pairs (pattern id, host id) aligned with the pattern's sorted
// vertex list, or nullopt.
std::optional<std::vector<std::pair<int, int>>>
find_induced(const Graph& host, const Graph& pattern, int cap = 16);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace wrco
