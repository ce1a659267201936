#pragma once

#include <random>
#include <string>
#include <vector>

#include "wrco/binmatrix.hpp"

namespace wrco {

// Timing harness for the CCO decision path on generated yes-instances.
struct BenchRow {
    long long size = 0;  // size(M) = rows + cols + ones
    long long rows = 0;
    long long cols = 0;
    long long ones = 0;
    long long nanos = 0; // median of the timed repetitions
    bool cco = false;
};

// Interval-structured random matrix of roughly the requested size(M): every
// row is a short interval with nondecreasing endpoints (a staircase), no
// trivial rows or columns, so the instance is a CCO yes-instance hitting the
// near-linear decision path.
BinaryMatrix generate_staircase(long long target_size, std::mt19937& rng);

std::vector<BenchRow> run_bench(const std::vector<long long>& sizes,
                                unsigned seed = 20260823u, int repetitions = 3);

// Least-squares slope of log(time) vs log(size).
double fit_exponent(const std::vector<BenchRow>& rows);

// CSV: header then one line per row (size,rows,cols,ones,nanos,decision).
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace wrco
