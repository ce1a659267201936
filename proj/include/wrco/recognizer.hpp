#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrco/binmatrix.hpp"
#include "wrco/graph.hpp"
#include "wrco/orientations.hpp"
#include "wrco/words.hpp"

namespace wrco {

// Biadjacency matrix: rows follow p.side_x, columns p.side_y.
BinaryMatrix biadjacency(const Graph& g, const CoBipartition& p);

// CG(m): co-bipartite graph with clique X = {1..rows}, clique Y =
// {rows+1..rows+cols}, cross edges at the 1-entries. Returned with its
// defining partition; biadjacency(cg(m)) round-trips to m.
std::pair<Graph, CoBipartition> cg(const BinaryMatrix& m);

// Induced forbidden-subgraph certificate.
struct Certificate {
    std::string family;        // family label, e.g. "CG(ZA)", "CoC2k", "G1"
    int k = 0;                 // family parameter (0 when not parameterized)
    std::vector<int> vertices; // sorted vertex ids of the input graph
};

struct Verdict {
    bool semi_transitive = false;
    std::optional<Orientation> witness;       // validated when present
    std::optional<Certificate> certificate;   // validated when present
    std::string notes;                        // witness/certificate provenance
};

// Exact semi-transitivity decision for a co-bipartite graph (input_error with
// an odd-cycle witness of the complement otherwise). The decision is the CCO
// property of the biadjacency matrix; witness and certificate are budgeted
// best-effort extras, always validated before attachment.
Verdict recognize(const Graph& g, long long budget = 200000000);

// Semi-transitive orientation for a yes-instance, via the constructive cases:
//   Case 1: no trivial rows (or no trivial columns, transposing) — monotone
//           circular biorder, then the biorder orientation;
//   Case 2: all-0 row and all-0 column — consecutive-ones biorder with the
//           trivial lines last;
//   Case 3: all-1 row and all-1 column — the universal vertex becomes a
//           source over a transitive orientation of the rest;
//   fallback: exhaustive search. Absent only on budget exhaustion.
// notes (optional) receives the provenance of the path taken.
std::optional<Orientation> witness_orientation(const Graph& g, const CoBipartition& p,
                                               long long budget = 200000000,
                                               std::string* notes = nullptr);

// Maps a forbidden configuration located in biadjacency(g, p) back to a
// vertex certificate; validates isomorphism to the named family member
// (internal_error on failure, never silent).
Certificate extract_certificate(const Graph& g, const CoBipartition& p,
                                const PatternId& pattern,
                                const std::vector<int>& row_set,
                                const std::vector<int>& col_set);

// Minimal forbidden co-bipartite graphs for semi-transitivity.
struct GsMember {
    enum class Name { CG_ZA, CG_ZB, CG_ZD, CG_coZA, CG_MIkStar, CG_coMIkStar };
    Name name;
    int k = 0; // >= 3 for the MIkStar members
};
Graph generate_gs(const GsMember& member);
std::string gs_name(const GsMember& member);
GsMember parse_gs_name(const std::string& name, int k);

// Co-bipartite permutation (equivalently, co-bipartite circle) recognition:
// true iff g contains none of G1, G2, G3, or a complement of an even cycle
// of length >= 6. The decision is exact within a 16-vertex cap; a forbidden
// certificate or a 2-uniform word witness is attached best-effort.
struct PermutationCheck {
    bool permutation = false;
    std::optional<Certificate> certificate; // forbidden member when false
    std::optional<Word> witness;            // validated 2-uniform representant
};
PermutationCheck is_cobipartite_permutation(const Graph& g,
                                            long long budget = 200000000);

// Verdict text: "SEMI-TRANSITIVE" / "NOT-SEMI-TRANSITIVE", then an optional
// WITNESS block (orientation format) or CERTIFICATE line.
std::string verdict_to_text(const Verdict& v);
std::string certificate_line(const Certificate& c);

} // namespace wrco
