#pragma once

#include <stdexcept>
#include <string>

namespace wrco {

// Bad user-supplied data: malformed files, out-of-range vertices, invalid
// partitions, biorders failing their validity preconditions.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search ran out of nodes or exceeded a cap before it could give an
// authoritative answer. Deliberately distinct from an authoritative "none".
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A validated-before-return guarantee failed. Always a bug, never silent.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

enum class SearchStatus { found, none, budget };

} // namespace wrco
