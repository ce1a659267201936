#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrco/errors.hpp"

namespace wrco {

// Sparse 0/1 matrix: rows of strictly sorted 0-based column indices.
struct BinaryMatrix {
    int row_count = 0;
    int col_count = 0;
    std::vector<std::vector<int>> rows;

    BinaryMatrix() = default;
    BinaryMatrix(int m, int n) : row_count(m), col_count(n), rows(m) {}
    // Dense 0/1 initializer, e.g. {{1,0},{0,1}}.
    static BinaryMatrix dense(const std::vector<std::vector<int>>& cells);

    long long ones() const;
    long long size() const { return row_count + col_count + ones(); } // size(M)
    bool at(int i, int j) const;
    void set(int i, int j); // insert a 1
    bool operator==(const BinaryMatrix& o) const {
        return row_count == o.row_count && col_count == o.col_count && rows == o.rows;
    }

    std::vector<std::vector<int>> columns() const; // column-index lists of rows holding a 1
    bool row_trivial(int i) const {
        return rows[i].empty() || static_cast<int>(rows[i].size()) == col_count;
    }
    bool has_trivial_row() const;
    bool has_all_zero_row() const;
    bool has_all_one_row() const;
};

BinaryMatrix transpose(const BinaryMatrix& m);
// Complement the rows selected by mask (mask.size() == row_count). The
// all-ones mask yields the full complement.
BinaryMatrix row_complement(const BinaryMatrix& m, const std::vector<bool>& mask);
BinaryMatrix complement(const BinaryMatrix& m);
BinaryMatrix add_empty_column(const BinaryMatrix& m); // M*

// ---------------------------------------------------------------------------
// Forbidden patterns.
// ZA..ZD are fixed matrices (4x4, 4x4, 3x5, 4x4); coZA/coZC their full row
// complements; MIk is k x k (rows {i,i+1} cyclically), MIkStar = MIk plus an
// empty column; coMIkStar its complement. "T" suffix = transpose.
struct PatternId {
    enum class Name {
        ZA, ZB, ZC, ZD, coZA, coZC,
        ZAT, ZBT, ZCT, ZDT, coZAT, coZCT,
        MIk, MIkStar, coMIkStar,
        MIkT, MIkStarT, coMIkStarT
    };
    Name name;
    int k = 0; // only for the MIk family, k >= 3
};

BinaryMatrix generate_pattern(const PatternId& id);
std::string pattern_name(const PatternId& id);
PatternId parse_pattern_name(const std::string& name, int k);

// The 12-member finite forbidden family for the circularly-compatible-ones
// property: ZA, ZB, ZC, ZD, coZA, coZC and their transposes.
const std::vector<PatternId>& fcco_finite();

// Binary bracelets of length k: lexicographic minima under rotation and
// reversal. k = 3 is special-cased to {000, 111}.
std::vector<std::string> bracelets(int k);

// ---------------------------------------------------------------------------
// Ones-structure decisions (all exact; witness-or-none).

// Column order making every row contiguous, or none.
std::optional<std::vector<int>> has_consecutive_ones(const BinaryMatrix& m);
// Cyclic column order making every row a circular arc, or none. Implemented
// by the column-zeroing reduction: complement all rows with a 1 in a chosen
// column (first column of a minimum-size row), then test consecutive ones.
std::optional<std::vector<int>> has_circular_ones(const BinaryMatrix& m);

bool verify_consecutive_ones(const BinaryMatrix& m, const std::vector<int>& col_order);
bool verify_circular_ones(const BinaryMatrix& m, const std::vector<int>& col_order);

// Configuration containment: row and column subsets of m whose submatrix
// equals the pattern up to row/column permutation. Deterministic first hit
// (column subsets ascending, then column bijections, then smallest rows).
std::optional<std::pair<std::vector<int>, std::vector<int>>>
contains_configuration(const BinaryMatrix& m, const BinaryMatrix& pattern);

// Search for a configuration from the infinite family: MIkStar(k), its row
// complement, and their transposes, k >= 3. Authoritative only within the
// column cap; "unknown" when larger members might fit but were not searched.
struct MikStarHit {
    enum class Status { found, none, unknown };
    Status status = Status::none;
    PatternId pattern{PatternId::Name::MIkStar, 0};
    std::vector<int> row_set, col_set;
};
MikStarHit find_mik_star(const BinaryMatrix& m, int cap = 8);

// ---------------------------------------------------------------------------
// Biorders.

// Pair of linear orders with per-row circular-interval endpoints. Positions
// are 0-based ranks; d/e are column ids, d_pos/e_pos their ranks in col_order,
// f_pos the unwrapped right endpoint in the doubled order (e_pos, or
// e_pos + col_count when the interval wraps).
struct Biorder {
    std::vector<int> row_order; // row indices in increasing ⪯_r
    std::vector<int> col_order; // column indices in increasing ⪯_c
    struct Endpoints {
        int d = -1, e = -1;         // column ids
        int d_pos = -1, e_pos = -1; // ranks in col_order
        int f_pos = -1;             // unwrapped right endpoint
        bool wraps = false;         // e ≺ d
    };
    std::vector<std::optional<Endpoints>> endpoints; // by original row index; nullopt = trivial row
};

// Computes endpoints for the given orders; nullopt if some nontrivial row is
// not a circular interval of col_order.
std::optional<Biorder> try_biorder(const BinaryMatrix& m,
                                   const std::vector<int>& row_order,
                                   const std::vector<int>& col_order);

// Monotone-circular check over the nontrivial rows in ⪯_r order:
//   (i) left endpoints d monotone, (ii) unwrapped right endpoints f monotone
//   in the doubled order, (iii) f_1 = e_1 + n, or f_1 = e_1 and f_p <= e_1 + n.
// Requires m trivial-row-free (input_error otherwise).
struct McCheck {
    bool ok = false;
    std::string violated; // first violated condition when !ok
};
McCheck check_monotone_circular(const BinaryMatrix& m, const Biorder& b);

// Same conditions applied to whatever nontrivial rows exist (used internally
// by the orientation construction, where trivial rows are legal in Case 2).
McCheck check_monotone_circular_rows(const BinaryMatrix& m, const Biorder& b);

// Canonical monotone-circular candidate for a fixed column order: rows sorted
// by (d_pos, f_pos), trivial rows last; nullopt when the candidate fails the
// monotone-circular conditions (complete for a fixed column order).
std::optional<Biorder> greedy_mc_for_col_order(const BinaryMatrix& m,
                                               const std::vector<int>& col_order);

// Search a monotone circular biorder: for each candidate column order, rows
// sorted by (d_pos, f_pos) are the canonical candidate (complete for a fixed
// column order). Trivial-row-free matrices only.
std::optional<Biorder> search_monotone_circular(const BinaryMatrix& m,
                                                int cap = 7,
                                                long long budget = 100000000);

// ---------------------------------------------------------------------------
// Circularly compatible ones.

struct CcoEvidence {
    enum class Kind { none, rows_not_circular, cols_not_circular, configuration };
    Kind kind = Kind::none;
    PatternId pattern{PatternId::Name::ZA, 0};
    std::vector<int> row_set, col_set; // configuration location when kind == configuration
};
struct CcoResult {
    bool cco = false;
    CcoEvidence evidence;
};

// Exact decision: circular ones for rows and for columns, and no finite
// forbidden configuration. A greedy monotone-circular fast path (both sides)
// answers yes-instances without trivial lines in near-linear time.
CcoResult is_cco(const BinaryMatrix& m);

// Biorder witnessing the CCO property: rows circular intervals of ⪯_c,
// columns circular intervals of ⪯_r, endpoint sequences of nontrivial rows
// circularly monotone, and every pairwise row difference (resp. column
// difference) a circular interval. Validated before return; authoritative
// none within the cap.
struct CcoBiorderResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Biorder> biorder;
};
CcoBiorderResult search_cco_biorder(const BinaryMatrix& m, int cap = 7,
                                    long long budget = 100000000);
// The validity predicate used by search_cco_biorder (exposed for sweeps).
bool valid_cco_biorder(const BinaryMatrix& m, const Biorder& b);

// ---------------------------------------------------------------------------
// Text format: header "m n", then m lines of sorted 1-based column indices
// (an empty line is an empty row).
std::string matrix_to_text(const BinaryMatrix& m);
BinaryMatrix parse_matrix_text(const std::string& text);

} // namespace wrco
