#pragma once

#include <string>

#include "wrco/graph.hpp"

namespace wrco {

// Named graph families used by the recognizer's forbidden-subgraph machinery.
//
// CoC2k(k>=3): complement of the cycle 1..2k.
// G1, G2, G3: the three sporadic minimal forbidden graphs for co-bipartite
//   permutation graphs; cliques {1,2,3} and {4,5,6,7} plus cross edges.
// W5 / W7: wheels; cycle 1..5 (resp. 1..7) with hub 6 (resp. 8).
// Y6: 7-vertex circle-graph obstruction (a K4 with one triangle subdivided);
//   the drawing leaves vertices unlabeled, numbering documented in README.
struct FamilyId {
    enum class Name { CoC2k, G1, G2, G3, W5, W7, Y6 };
    Name name;
    int k = 0; // meaningful only for CoC2k
};

Graph generate_family(const FamilyId& id);

FamilyId parse_family_name(const std::string& name, int k);

} // namespace wrco
