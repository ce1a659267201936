// wrco: recognition of word-representable (semi-transitive) co-bipartite
// graphs, with orientation witnesses and forbidden-subgraph certificates.
//
// Exit codes: 0 decision computed; 1 negative decision where the verb
// promises a positive (verify-word, sweep discrepancy); 2 input error;
// 3 budget/cap error (including --authoritative downgrades).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wrco/bench.hpp"
#include "wrco/binmatrix.hpp"
#include "wrco/errors.hpp"
#include "wrco/families.hpp"
#include "wrco/graph.hpp"
#include "wrco/orientations.hpp"
#include "wrco/recognizer.hpp"
#include "wrco/sweeps.hpp"
#include "wrco/words.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wrco::input_error("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string graph_path, matrix_path, word_text, family;
    int k = 0, kmax = 3, jobs = 1;
    long long budget = 200000000;
    int cap = -1; // -1 = module default
    bool authoritative = false;
    std::string format = "text";
};

wrco::Graph load_graph(const Options& o) {
    if (o.graph_path.empty()) throw wrco::input_error("--graph is required");
    return wrco::parse_graph_text(slurp(o.graph_path));
}

int cmd_recognize(const Options& o) {
    wrco::Verdict v = wrco::recognize(load_graph(o), o.budget);
    std::cout << wrco::verdict_to_text(v);
    if (o.authoritative && v.semi_transitive && !v.witness)
        throw wrco::budget_error("witness unavailable within budget");
    if (o.authoritative && !v.semi_transitive && !v.certificate)
        throw wrco::budget_error("certificate unavailable within cap");
    return 0;
}

int cmd_orient(const Options& o) {
    wrco::Graph g = load_graph(o);
    auto pr = wrco::cobipartite_partition(g);
    if (!pr.partition) throw wrco::input_error("graph is not co-bipartite");
    wrco::Verdict v = wrco::recognize(g, o.budget);
    if (!v.semi_transitive) {
        std::cout << "NOT-SEMI-TRANSITIVE\n";
        return 0;
    }
    if (!v.witness) {
        if (o.authoritative)
            throw wrco::budget_error("witness unavailable within budget");
        std::cout << "SEMI-TRANSITIVE\n# witness unavailable within budget\n";
        return 0;
    }
    std::cout << "SEMI-TRANSITIVE\n# " << v.notes << '\n'
              << wrco::orientation_to_text(*v.witness);
    return 0;
}

int cmd_certify(const Options& o) {
    wrco::Verdict v = wrco::recognize(load_graph(o), o.budget);
    if (v.semi_transitive) {
        std::cout << "SEMI-TRANSITIVE\n";
        return 0;
    }
    if (!v.certificate) {
        if (o.authoritative)
            throw wrco::budget_error("certificate unavailable within cap");
        std::cout << "NOT-SEMI-TRANSITIVE\n# certificate unavailable within cap\n";
        return 0;
    }
    std::cout << "NOT-SEMI-TRANSITIVE\n" << wrco::certificate_line(*v.certificate);
    return 0;
}

int cmd_verify_word(const Options& o) {
    wrco::Graph g = load_graph(o);
    wrco::Word w = wrco::parse_word_text(o.word_text);
    if (wrco::represents(w, g)) {
        std::cout << "REPRESENTS\n";
        return 0;
    }
    std::cout << "DOES-NOT-REPRESENT\n";
    return 1;
}

int cmd_oracle(const Options& o) {
    using wrco::SearchStatus;
    if (!o.matrix_path.empty()) {
        wrco::BinaryMatrix m = wrco::parse_matrix_text(slurp(o.matrix_path));
        auto r = wrco::search_cco_biorder(m, o.cap > 0 ? o.cap : 7, o.budget);
        if (r.status == SearchStatus::budget) {
            if (o.authoritative) throw wrco::budget_error("cco biorder search capped");
            std::cout << "BUDGET\n";
            return 0;
        }
        if (r.status == SearchStatus::none) {
            std::cout << "NONE\n";
            return 0;
        }
        std::cout << "FOUND\nrow-order:";
        for (int i : r.biorder->row_order) std::cout << ' ' << i + 1;
        std::cout << "\ncol-order:";
        for (int j : r.biorder->col_order) std::cout << ' ' << j + 1;
        std::cout << '\n';
        return 0;
    }
    wrco::Graph g = load_graph(o);
    if (o.word_text == "representant") {
        auto r = wrco::search_representant(g, o.kmax, o.budget);
        if (r.status == SearchStatus::budget) {
            if (o.authoritative) throw wrco::budget_error("representant search capped");
            std::cout << "BUDGET\n";
            return 0;
        }
        if (r.status == SearchStatus::none) {
            std::cout << "NONE\n";
            return 0;
        }
        std::cout << "FOUND k=" << r.k << '\n' << wrco::word_to_text(r.word);
        return 0;
    }
    auto r = wrco::search_semi_transitive(g, o.budget, o.cap > 0 ? o.cap : 12);
    if (r.status == SearchStatus::budget) {
        if (o.authoritative) throw wrco::budget_error("semi-transitive search capped");
        std::cout << "BUDGET\n";
        return 0;
    }
    if (r.status == SearchStatus::none) {
        std::cout << "NONE\n";
        return 0;
    }
    std::cout << "FOUND\n" << wrco::orientation_to_text(*r.orientation);
    return 0;
}

int cmd_gen(const Options& o) {
    if (o.family.empty()) throw wrco::input_error("--family is required");
    if (o.family == "bracelets") {
        for (const std::string& b : wrco::bracelets(o.k)) std::cout << b << '\n';
        return 0;
    }
    try {
        wrco::Graph g = wrco::generate_family(wrco::parse_family_name(o.family, o.k));
        std::cout << wrco::graph_to_text(g);
        return 0;
    } catch (const wrco::input_error&) {
    }
    try {
        wrco::Graph g = wrco::generate_gs(wrco::parse_gs_name(o.family, o.k));
        std::cout << wrco::graph_to_text(g);
        return 0;
    } catch (const wrco::input_error&) {
    }
    wrco::BinaryMatrix m = wrco::generate_pattern(wrco::parse_pattern_name(o.family, o.k));
    std::cout << wrco::matrix_to_text(m);
    return 0;
}

int cmd_sweep(const Options& o) {
    bool all = true;
    for (const wrco::SweepReport& r : wrco::run_all_sweeps(o.jobs)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.name
                  << " checked=" << r.checked;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
        std::cout << '\n';
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

int cmd_bench(const Options&) {
    std::vector<long long> sizes{1000, 10000, 100000, 1000000};
    auto rows = wrco::run_bench(sizes);
    std::cout << wrco::bench_csv(rows);
    std::cout << "# exponent=" << wrco::fit_exponent(rows) << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"word-representability recognition for co-bipartite graphs"};
    app.require_subcommand(1);
    Options o;
    std::string verb;
    for (const char* name : {"recognize", "orient", "certify", "verify-word", "oracle",
                             "gen", "sweep", "bench"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--graph", o.graph_path, "graph file");
        sub->add_option("--matrix", o.matrix_path, "binary matrix file");
        sub->add_option("--word", o.word_text,
                        "word (vertex ids), or 'representant' to select that oracle");
        sub->add_option("--family", o.family, "family, pattern, or 'bracelets'");
        sub->add_option("--k", o.k, "family parameter");
        sub->add_option("--kmax", o.kmax, "uniformity bound for representant search");
        sub->add_option("--budget", o.budget, "search node budget");
        sub->add_option("--cap", o.cap, "authoritative-size cap override");
        sub->add_option("--jobs", o.jobs, "worker threads for sweeps");
        sub->add_option("--format", o.format, "text or csv");
        sub->add_flag("--authoritative", o.authoritative,
                      "fail (exit 3) instead of degrading when a cap is exceeded");
        sub->callback([&verb, name]() { verb = name; });
    }
    CLI11_PARSE(app, argc, argv);
    try {
        if (verb == "recognize") return cmd_recognize(o);
        if (verb == "orient") return cmd_orient(o);
        if (verb == "certify") return cmd_certify(o);
        if (verb == "verify-word") return cmd_verify_word(o);
        if (verb == "oracle") return cmd_oracle(o);
        if (verb == "gen") return cmd_gen(o);
        if (verb == "sweep") return cmd_sweep(o);
        if (verb == "bench") return cmd_bench(o);
        std::cerr << "error: unknown verb\n";
        return 2;
    } catch (const wrco::budget_error& e) {
        std::cerr << "budget-error: " << e.what() << '\n';
        return 3;
    } catch (const wrco::input_error& e) {
        std::cerr << "input-error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal-error: " << e.what() << '\n';
        return 2;
    }
}
