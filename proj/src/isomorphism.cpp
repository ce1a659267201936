#include "wrco/isomorphism.hpp"

#include <algorithm>

#include "wrco/errors.hpp"

namespace wrco {

namespace {

struct EmbedState {
    const Graph& host;
    const Graph& pattern;
    int pn, hn;
    std::vector<int> pdeg, hdeg;
    std::vector<int> image;      // pattern index -> host index, -1 unset
    std::vector<char> used;      // host index used

    bool extend(int pi) {
        if (pi == pn) return true;
        for (int hi = 0; hi < hn; ++hi) {
            if (used[hi] || hdeg[hi] < pdeg[pi]) continue;
            bool ok = true;
            for (int pj = 0; pj < pi; ++pj) {
                bool pe = pattern.adjacent_idx(pi, pj);
                bool he = host.adjacent_idx(hi, image[pj]);
                if (pe != he) { ok = false; break; }
            }
            if (!ok) continue;
            image[pi] = hi;
            used[hi] = 1;
            if (extend(pi + 1)) return true;
            used[hi] = 0;
            image[pi] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<std::pair<int, int>>>
find_induced(const Graph& host, const Graph& pattern, int cap) {
    if (pattern.vertex_count() > cap)
        throw budget_error("find_induced: pattern exceeds cap of " + std::to_string(cap) +
                           " vertices");
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    EmbedState st{host, pattern, pattern.vertex_count(), host.vertex_count(), {}, {}, {}, {}};
    st.pdeg.resize(st.pn);
    st.hdeg.resize(st.hn);
    for (int i = 0; i < st.pn; ++i) st.pdeg[i] = pattern.degree(pattern.id_at(i));
    for (int i = 0; i < st.hn; ++i) st.hdeg[i] = host.degree(host.id_at(i));
    st.image.assign(st.pn, -1);
    st.used.assign(st.hn, 0);
    if (!st.extend(0)) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    out.reserve(st.pn);
    for (int i = 0; i < st.pn; ++i)
        out.emplace_back(pattern.id_at(i), host.id_at(st.image[i]));
    return out;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    // An induced embedding between equal-sized graphs is an isomorphism.
    return find_induced(b, a, a.vertex_count()).has_value();
}

} // namespace wrco
