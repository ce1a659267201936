#include "wrco/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace wrco {

BinaryMatrix generate_staircase(long long target_size, std::mt19937& rng) {
    // size(M) = m + n + ones; with n = m and ~2 ones per row this is ~4m.
    int m = static_cast<int>(std::max<long long>(5, target_size / 4));
    int n = m;
    BinaryMatrix out(m, n);
    int a = 0, b = 1;
    for (int i = 0; i < m; ++i) {
        if (i > 0) {
            a = std::min<int>(n - 2, a + static_cast<int>(rng() % 2));
            b = std::min<int>(n - 1, std::max(b, a + 1 + static_cast<int>(rng() % 2)));
        }
        if (i == m - 1) b = n - 1; // cover the last column
        for (int c = a; c <= b; ++c) out.rows[i].push_back(c);
    }
    // a_0 = 0 and b_{m-1} = n-1 cover every column; the walk advances by at
    // most one per row, so with m = n every column is reached.
    return out;
}

std::vector<BenchRow> run_bench(const std::vector<long long>& sizes, unsigned seed,
                                int repetitions) {
    std::mt19937 rng(seed);
    std::vector<BenchRow> rows;
    for (long long target : sizes) {
        BinaryMatrix m = generate_staircase(target, rng);
        BenchRow r;
        r.rows = m.row_count;
        r.cols = m.col_count;
        r.ones = m.ones();
        r.size = m.size();
        std::vector<long long> samples;
        bool cco = false;
        for (int t = 0; t < std::max(1, repetitions); ++t) {
            auto t0 = std::chrono::steady_clock::now();
            cco = is_cco(m).cco;
            auto t1 = std::chrono::steady_clock::now();
            samples.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        std::sort(samples.begin(), samples.end());
        r.nanos = samples[samples.size() / 2];
        r.cco = cco;
        rows.push_back(r);
    }
    return rows;
}

double fit_exponent(const std::vector<BenchRow>& rows) {
    if (rows.size() < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = static_cast<double>(rows.size());
    for (const BenchRow& r : rows) {
        double x = std::log(static_cast<double>(r.size));
        double y = std::log(static_cast<double>(std::max<long long>(1, r.nanos)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream o;
    o << "size,rows,cols,ones,nanos,decision\n";
    for (const BenchRow& r : rows)
        o << r.size << ',' << r.rows << ',' << r.cols << ',' << r.ones << ','
          << r.nanos << ',' << (r.cco ? "cco" : "not-cco") << '\n';
    return o.str();
}

} // namespace wrco
