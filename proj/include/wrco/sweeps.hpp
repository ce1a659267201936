#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wrco/binmatrix.hpp"

namespace wrco {

// Exhaustive equivalence suites backing the acceptance criteria. Every sweep
// is deterministic (fixed seeds, ordered aggregation) and returns the number
// of instances checked plus a first-failure description.
struct SweepReport {
    std::string name;
    bool pass = false;
    long long checked = 0;
    std::string detail; // counts on success, first mismatch on failure
};

// 4x4 binary matrices deduplicated by row/column-permutation canonical form,
// as 16-bit row-major representatives in increasing order.
std::vector<uint16_t> matrix_universe_4x4();
BinaryMatrix matrix_from_bits(uint16_t bits, int rows, int cols);

SweepReport sweep_oracle_equivalence(int jobs = 1);      // criterion 1
SweepReport sweep_cco_equivalence(int jobs = 1);         // criterion 2
SweepReport sweep_tucker_reduction(int jobs = 1);        // criterion 3
SweepReport sweep_monotone_circular(int jobs = 1);       // criterion 4
SweepReport sweep_gs_minimality();                       // criterion 5
SweepReport sweep_word_fixture();                        // criterion 6
SweepReport sweep_local_complementation();               // criterion 7
SweepReport sweep_circle_permutation(int jobs = 1);      // criterion 8
SweepReport sweep_witness_validity(int jobs = 1);        // criterion 9

std::vector<SweepReport> run_all_sweeps(int jobs = 1);

} // namespace wrco
