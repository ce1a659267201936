#include "wrco/families.hpp"

#include "wrco/errors.hpp"

namespace wrco {

namespace {

Graph wheel(int rim) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= rim; ++i) {
        es.emplace_back(i, i % rim + 1);
        es.emplace_back(i, rim + 1);
    }
    return Graph::build(rim + 1, es);
}

} // namespace

Graph generate_family(const FamilyId& id) {
    using N = FamilyId::Name;
    switch (id.name) {
        case N::CoC2k: {
            if (id.k < 3) throw input_error("generate_family: CoC2k requires k >= 3");
            int n = 2 * id.k;
            std::vector<std::pair<int, int>> cyc;
            for (int i = 1; i <= n; ++i) cyc.emplace_back(i, i % n + 1);
            return Graph::build(n, cyc).complement();
        }
        case N::G1:
            return Graph::build(7, {{1, 2}, {1, 3}, {2, 3},
                                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                    {1, 4}, {2, 5}, {3, 4}, {3, 5}, {3, 6}});
        case N::G2:
            return Graph::build(7, {{1, 2}, {1, 3}, {2, 3},
                                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                    {2, 4}, {2, 5}, {3, 4}, {3, 6}});
        case N::G3:
            return Graph::build(7, {{1, 2}, {1, 3}, {2, 3},
                                    {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                    {1, 5}, {1, 6}, {2, 4}, {2, 5}, {3, 4}, {3, 6}});
        case N::W5:
            return wheel(5);
        case N::W7:
            return wheel(7);
        case N::Y6:
            // K4 on {1,3,5,7}... structurally: triangle 1-3-5 of a K4 with each
            // K4-edge of one triangle subdivided; equals G2 * 7 * 1 up to
            // isomorphism (checked in tests).
            return Graph::build(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 5},
                                    {3, 7}, {4, 7}, {5, 6}, {6, 7}});
    }
    throw input_error("generate_family: invalid family id");
}

FamilyId parse_family_name(const std::string& name, int k) {
    using N = FamilyId::Name;
    if (name == "CoC2k") return {N::CoC2k, k};
    if (name == "G1") return {N::G1, 0};
    if (name == "G2") return {N::G2, 0};
    if (name == "G3") return {N::G3, 0};
    if (name == "W5") return {N::W5, 0};
    if (name == "W7") return {N::W7, 0};
    if (name == "Y6") return {N::Y6, 0};
    throw input_error("unknown family name: " + name);
}

} // namespace wrco
