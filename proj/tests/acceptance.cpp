// Acceptance runner: one criterion per invocation, one PASS/FAIL line each.

#include <cstdlib>
#include <iostream>
#include <thread>

#include "wrco/bench.hpp"
#include "wrco/sweeps.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: wrco_acceptance <criterion 1..10>\n";
        return 2;
    }
    int n = std::atoi(argv[1]);
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    wrco::SweepReport r;
    switch (n) {
        case 1: r = wrco::sweep_oracle_equivalence(jobs); break;
        case 2: r = wrco::sweep_cco_equivalence(jobs); break;
        case 3: r = wrco::sweep_tucker_reduction(jobs); break;
        case 4: r = wrco::sweep_monotone_circular(jobs); break;
        case 5: r = wrco::sweep_gs_minimality(); break;
        case 6: r = wrco::sweep_word_fixture(); break;
        case 7: r = wrco::sweep_local_complementation(); break;
        case 8: r = wrco::sweep_circle_permutation(jobs); break;
        case 9: r = wrco::sweep_witness_validity(jobs); break;
        case 10: {
            auto rows = wrco::run_bench({1000, 10000, 100000, 1000000});
            double exp = wrco::fit_exponent(rows);
            r.name = "bench-near-linear";
            r.checked = static_cast<long long>(rows.size());
            bool all_yes = true;
            for (const auto& row : rows) all_yes = all_yes && row.cco;
            r.pass = all_yes && exp <= 1.5;
            r.detail = "exponent=" + std::to_string(exp) +
                       (all_yes ? "" : " (generator produced a non-CCO instance)");
            std::cout << wrco::bench_csv(rows);
            break;
        }
        default:
            std::cerr << "unknown criterion " << n << '\n';
            return 2;
    }
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion-" << n << ' ' << r.name
              << " checked=" << r.checked;
    if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
    std::cout << std::endl;
    return r.pass ? 0 : 1;
}
