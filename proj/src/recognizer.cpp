#include "wrco/recognizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wrco/families.hpp"
#include "wrco/isomorphism.hpp"

namespace wrco {

BinaryMatrix biadjacency(const Graph& g, const CoBipartition& p) {
    if (!is_valid_cobipartition(g, p))
        throw input_error("biadjacency: invalid co-bipartition");
    BinaryMatrix m(static_cast<int>(p.side_x.size()), static_cast<int>(p.side_y.size()));
    for (int i = 0; i < m.row_count; ++i)
        for (int j = 0; j < m.col_count; ++j)
            if (g.has_edge(p.side_x[i], p.side_y[j])) m.rows[i].push_back(j);
    return m;
}

std::pair<Graph, CoBipartition> cg(const BinaryMatrix& m) {
    int r = m.row_count, c = m.col_count;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) edges.emplace_back(i, j);
    for (int i = r + 1; i <= r + c; ++i)
        for (int j = i + 1; j <= r + c; ++j) edges.emplace_back(i, j);
    for (int i = 0; i < r; ++i)
        for (int j : m.rows[i]) edges.emplace_back(i + 1, r + 1 + j);
    Graph g = Graph::build(r + c, edges);
    CoBipartition p;
    for (int i = 1; i <= r; ++i) p.side_x.push_back(i);
    for (int j = r + 1; j <= r + c; ++j) p.side_y.push_back(j);
    return {g, p};
}

// ---------------------------------------------------------------------------
// Witness orientation

namespace {

// Case 1: trivial-row-free matrix with rows rx and columns ry.
Orientation case1_witness(const Graph& g, const std::vector<int>& rx,
                          const std::vector<int>& ry, long long budget) {
    CoBipartition p{rx, ry};
    BinaryMatrix m = biadjacency(g, p);
    auto b = search_monotone_circular(m, 7, budget);
    if (!b)
        throw internal_error("witness_orientation: trivial-row-free matrix of a "
                             "semi-transitive graph has no monotone circular biorder");
    return orientation_from_biorder(g, p, *b);
}

// Case 2: all-0 row and all-0 column. Consecutive-ones biorder with the
// trivial lines last and rows sorted by their interval endpoints.
std::optional<Orientation> case2_witness(const Graph& g, const CoBipartition& p,
                                         const BinaryMatrix& m) {
    auto cols = m.columns();
    std::vector<int> ntc, tvc;
    for (int j = 0; j < m.col_count; ++j)
        (cols[j].empty() ? tvc : ntc).push_back(j);
    if (static_cast<int>(ntc.size()) > 7)
        throw budget_error("witness_orientation: case-2 column count exceeds cap 7");
    std::vector<int> ident(m.row_count);
    std::iota(ident.begin(), ident.end(), 0);
    std::sort(ntc.begin(), ntc.end());
    do {
        std::vector<int> colord = ntc;
        colord.insert(colord.end(), tvc.begin(), tvc.end());
        auto b0 = try_biorder(m, ident, colord);
        if (!b0) continue;
        bool linear = true;
        std::vector<std::tuple<int, int, int>> keyed;
        std::vector<int> trivial_rows;
        for (int i = 0; i < m.row_count; ++i) {
            if (!b0->endpoints[i]) {
                trivial_rows.push_back(i);
            } else if (b0->endpoints[i]->wraps) {
                linear = false;
                break;
            } else {
                keyed.emplace_back(b0->endpoints[i]->d_pos, b0->endpoints[i]->e_pos, i);
            }
        }
        if (!linear) continue;
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> roword;
        for (auto& [d, e, i] : keyed) roword.push_back(i);
        roword.insert(roword.end(), trivial_rows.begin(), trivial_rows.end());
        auto b = try_biorder(m, roword, colord);
        if (!b) continue;
        if (!check_monotone_circular_rows(m, *b).ok) continue;
        return orientation_from_biorder(g, p, *b);
    } while (std::next_permutation(ntc.begin(), ntc.end()));
    return std::nullopt;
}

// Case 3: universal vertex v (an all-1 row) over a transitively oriented rest.
std::optional<Orientation> case3_witness(const Graph& g, int v, long long budget) {
    std::vector<int> rest;
    for (int u : g.vertices())
        if (u != v) rest.push_back(u);
    auto r = search_transitive(g.induced(rest), budget, 12);
    if (r.status == SearchStatus::budget) return std::nullopt;
    if (r.status == SearchStatus::none)
        throw internal_error("witness_orientation: case-3 remainder is not a "
                             "comparability graph");
    auto arcs = r.orientation->arcs();
    for (int u : rest) arcs.emplace_back(v, u);
    Orientation o = Orientation::from_arcs(g, arcs);
    if (find_violation(o))
        throw internal_error("witness_orientation: case-3 construction violated");
    return o;
}

} // namespace

std::optional<Orientation> witness_orientation(const Graph& g, const CoBipartition& p,
                                               long long budget, std::string* notes) {
    if (!is_valid_cobipartition(g, p))
        throw input_error("witness_orientation: invalid co-bipartition");
    auto note = [&](const std::string& s) {
        if (notes) *notes = s;
    };
    BinaryMatrix m = biadjacency(g, p);
    BinaryMatrix mt = transpose(m);
    try {
        if (p.side_x.empty() || p.side_y.empty()) {
            note("clique: identity vertex order");
            return Orientation::from_vertex_order(g, g.vertices());
        }
        if (!m.has_trivial_row()) {
            note("case-1 biorder");
            return case1_witness(g, p.side_x, p.side_y, budget);
        }
        if (!mt.has_trivial_row()) {
            note("case-1 biorder (transposed)");
            return case1_witness(g, p.side_y, p.side_x, budget);
        }
        bool z_row = m.has_all_zero_row(), z_col = mt.has_all_zero_row();
        bool o_row = m.has_all_one_row(), o_col = mt.has_all_one_row();
        if (z_row && z_col && !o_row && !o_col) {
            if (auto o = case2_witness(g, p, m)) {
                note("case-2 biorder");
                return o;
            }
            note("case-2 biorder not found; brute-force fallback");
        } else if (o_row && o_col && !z_row && !z_col) {
            int i0 = 0;
            while (static_cast<int>(m.rows[i0].size()) != m.col_count) ++i0;
            if (auto o = case3_witness(g, p.side_x[i0], budget)) {
                note("case-3 universal vertex");
                return o;
            }
            note("case-3 budget exhausted; brute-force fallback");
        } else {
            note("mixed trivial lines; brute-force fallback");
        }
    } catch (const budget_error&) {
        note("constructive case over cap; brute-force fallback");
    }
    auto r = search_semi_transitive(g, budget, 12);
    if (r.status == SearchStatus::found) return r.orientation;
    if (r.status == SearchStatus::none)
        throw input_error("witness_orientation: graph is not semi-transitive");
    note("witness search budget exhausted");
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

GsMember member_for_pattern(const PatternId& pid) {
    using P = PatternId::Name;
    using M = GsMember::Name;
    switch (pid.name) {
        case P::ZA: case P::ZAT: return {M::CG_ZA, 0};
        // CG of ZC and its transpose is isomorphic to CG(ZB)
        case P::ZB: case P::ZBT: case P::ZC: case P::ZCT: return {M::CG_ZB, 0};
        case P::ZD: case P::ZDT: return {M::CG_ZD, 0};
        // CG of coZC and its transpose is isomorphic to CG(coZA)
        case P::coZA: case P::coZAT: case P::coZC: case P::coZCT: return {M::CG_coZA, 0};
        case P::MIkStar: case P::MIkStarT: return {M::CG_MIkStar, pid.k};
        case P::coMIkStar: case P::coMIkStarT: return {M::CG_coMIkStar, pid.k};
        default:
            throw input_error("extract_certificate: pattern " + pattern_name(pid) +
                              " is not a certificate configuration");
    }
}

} // namespace

Certificate extract_certificate(const Graph& g, const CoBipartition& p,
                                const PatternId& pattern,
                                const std::vector<int>& row_set,
                                const std::vector<int>& col_set) {
    GsMember member = member_for_pattern(pattern);
    std::vector<int> verts;
    for (int i : row_set) verts.push_back(p.side_x.at(i));
    for (int j : col_set) verts.push_back(p.side_y.at(j));
    std::sort(verts.begin(), verts.end());
    Graph sub = g.induced(verts);
    Graph fam = generate_gs(member);
    if (!is_isomorphic(sub, fam))
        throw internal_error("extract_certificate: located configuration is not "
                             "isomorphic to " + gs_name(member));
    Certificate c;
    c.family = gs_name(member);
    c.k = member.k;
    c.vertices = verts;
    return c;
}

Graph generate_gs(const GsMember& member) {
    using M = GsMember::Name;
    PatternId pid{PatternId::Name::ZA, 0};
    switch (member.name) {
        case M::CG_ZA: pid = {PatternId::Name::ZA, 0}; break;
        case M::CG_ZB: pid = {PatternId::Name::ZB, 0}; break;
        case M::CG_ZD: pid = {PatternId::Name::ZD, 0}; break;
        case M::CG_coZA: pid = {PatternId::Name::coZA, 0}; break;
        case M::CG_MIkStar:
            if (member.k < 3) throw input_error("generate_gs: MIkStar needs k >= 3");
            pid = {PatternId::Name::MIkStar, member.k};
            break;
        case M::CG_coMIkStar:
            if (member.k < 3) throw input_error("generate_gs: coMIkStar needs k >= 3");
            pid = {PatternId::Name::coMIkStar, member.k};
            break;
    }
    return cg(generate_pattern(pid)).first;
}

std::string gs_name(const GsMember& member) {
    using M = GsMember::Name;
    switch (member.name) {
        case M::CG_ZA: return "CG(ZA)";
        case M::CG_ZB: return "CG(ZB)";
        case M::CG_ZD: return "CG(ZD)";
        case M::CG_coZA: return "CG(coZA)";
        case M::CG_MIkStar: return "CG(MIkStar)";
        case M::CG_coMIkStar: return "CG(coMIkStar)";
    }
    throw internal_error("gs_name: unreachable");
}

GsMember parse_gs_name(const std::string& name, int k) {
    using M = GsMember::Name;
    if (name == "CG(ZA)") return {M::CG_ZA, 0};
    if (name == "CG(ZB)") return {M::CG_ZB, 0};
    if (name == "CG(ZD)") return {M::CG_ZD, 0};
    if (name == "CG(coZA)") return {M::CG_coZA, 0};
    if (name == "CG(MIkStar)") return {M::CG_MIkStar, k};
    if (name == "CG(coMIkStar)") return {M::CG_coMIkStar, k};
    throw input_error("unknown forbidden-family member: " + name);
}

// ---------------------------------------------------------------------------
// Recognition

Verdict recognize(const Graph& g, long long budget) {
    auto pr = cobipartite_partition(g);
    if (!pr.partition) {
        std::ostringstream msg;
        msg << "recognize: graph is not co-bipartite; odd cycle of the complement:";
        for (int v : pr.odd_cycle) msg << ' ' << v;
        throw input_error(msg.str());
    }
    const CoBipartition& p = *pr.partition;
    BinaryMatrix m = biadjacency(g, p);
    CcoResult c = is_cco(m);
    Verdict v;
    v.semi_transitive = c.cco;
    if (c.cco) {
        try {
            v.witness = witness_orientation(g, p, budget, &v.notes);
        } catch (const budget_error&) {
            v.notes = "witness search budget exhausted";
        }
        if (v.witness && find_violation(*v.witness))
            throw internal_error("recognize: attached witness failed validation");
        return v;
    }
    std::optional<PatternId> pid;
    std::vector<int> rs, cs;
    if (c.evidence.kind == CcoEvidence::Kind::configuration) {
        pid = c.evidence.pattern;
        rs = c.evidence.row_set;
        cs = c.evidence.col_set;
    } else {
        for (const PatternId& q : fcco_finite()) {
            if (auto hit = contains_configuration(m, generate_pattern(q))) {
                pid = q;
                rs = hit->first;
                cs = hit->second;
                break;
            }
        }
        if (!pid) {
            MikStarHit mh = find_mik_star(m);
            if (mh.status == MikStarHit::Status::found) {
                pid = mh.pattern;
                rs = mh.row_set;
                cs = mh.col_set;
            } else if (mh.status == MikStarHit::Status::none) {
                throw internal_error("recognize: non-CCO matrix contains no "
                                     "forbidden configuration");
            } else {
                v.notes = "certificate search capped; larger MIkStar members not examined";
            }
        }
    }
    if (pid) {
        v.certificate = extract_certificate(g, p, *pid, rs, cs);
        v.notes = "certificate from configuration " + pattern_name(*pid);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Co-bipartite permutation recognition

namespace {

// Induced cycle of exactly len vertices (index-based canonical search:
// smallest vertex first, second < last), or none.
std::optional<std::vector<int>> induced_cycle(const Graph& h, int len) {
    int n = h.vertex_count();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<bool()> dfs = [&]() -> bool {
        int s = path[0], last = path.back();
        for (int v = s + 1; v < n; ++v) {
            if (used[v] || !h.adjacent_idx(last, v)) continue;
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (h.adjacent_idx(v, path[i])) { chord = true; break; }
            if (chord) continue;
            bool adj_s = h.adjacent_idx(v, s);
            bool closing = static_cast<int>(path.size()) + 1 == len;
            // first and last cycle vertices touch s; interior ones must not
            if (closing && !adj_s) continue;
            if (!closing && path.size() >= 2 && adj_s) continue;
            path.push_back(v);
            used[v] = 1;
            if (closing) {
                if (path[1] < path.back()) return true; // reflection quotient
            } else if (dfs()) {
                return true;
            }
            used[v] = 0;
            path.pop_back();
        }
        return false;
    };
    for (int s = 0; s + len <= n + 0 && s < n; ++s) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        if (dfs()) {
            std::vector<int> ids;
            for (int i : path) ids.push_back(h.id_at(i));
            return ids;
        }
    }
    return std::nullopt;
}

// Topological order (smallest id first) of the union of two orientations on
// the same vertex set; internal_error on a cycle.
std::vector<int> topo_union(const Graph& g, const Orientation& a, const Orientation& b) {
    auto vs = g.vertices();
    std::map<int, int> indeg;
    for (int v : vs) indeg[v] = 0;
    auto arcs_a = a.arcs();
    auto arcs_b = b.arcs();
    std::vector<std::pair<int, int>> arcs(arcs_a);
    arcs.insert(arcs.end(), arcs_b.begin(), arcs_b.end());
    for (auto& [u, w] : arcs) ++indeg[w];
    std::vector<int> order;
    std::set<int> remaining(vs.begin(), vs.end());
    while (!remaining.empty()) {
        int pick = -1;
        for (int v : remaining)
            if (indeg[v] == 0) { pick = v; break; }
        if (pick < 0)
            throw internal_error("permutation witness: orientation union is cyclic");
        order.push_back(pick);
        remaining.erase(pick);
        for (auto& [u, w] : arcs)
            if (u == pick && remaining.count(w)) --indeg[w];
    }
    return order;
}

} // namespace

PermutationCheck is_cobipartite_permutation(const Graph& g, long long budget) {
    auto pr = cobipartite_partition(g);
    if (!pr.partition)
        throw input_error("is_cobipartite_permutation: graph is not co-bipartite");
    if (g.vertex_count() > 16)
        throw budget_error("is_cobipartite_permutation: graph exceeds cap of 16 vertices");
    PermutationCheck out;
    using N = FamilyId::Name;
    for (N nm : {N::G1, N::G2, N::G3}) {
        Graph f = generate_family({nm, 0});
        if (auto hit = find_induced(g, f, 16)) {
            std::vector<int> verts;
            for (auto& [pv, hv] : *hit) verts.push_back(hv);
            std::sort(verts.begin(), verts.end());
            Certificate c;
            c.family = (nm == N::G1 ? "G1" : nm == N::G2 ? "G2" : "G3");
            c.vertices = verts;
            out.certificate = c;
            return out;
        }
    }
    Graph h = g.complement();
    for (int len = 6; len <= g.vertex_count(); ++len) {
        auto cyc = induced_cycle(h, len);
        if (!cyc) continue;
        std::vector<int> verts = *cyc;
        std::sort(verts.begin(), verts.end());
        Certificate c;
        c.family = "CoC2k";
        c.k = len / 2;
        c.vertices = verts;
        if (!is_isomorphic(g.induced(verts), generate_family({N::CoC2k, c.k})))
            throw internal_error("is_cobipartite_permutation: cycle certificate "
                                 "failed validation");
        out.certificate = c;
        return out;
    }
    out.permutation = true;
    // 2-uniform word witness from transitive orientations of g and its
    // complement: alternation in L1 L2 means "same relative order in both",
    // which is exactly adjacency in g.
    try {
        auto t1 = search_transitive(g, budget, 12);
        auto t2 = search_transitive(h, budget, 12);
        if (t1.status == SearchStatus::found && t2.status == SearchStatus::found) {
            auto l1 = topo_union(g, *t1.orientation, *t2.orientation);
            auto l2 = topo_union(g, *t1.orientation, t2.orientation->reversed());
            Word w;
            w.letters = l1;
            w.letters.insert(w.letters.end(), l2.begin(), l2.end());
            if (!represents(w, g))
                throw internal_error("is_cobipartite_permutation: word witness "
                                     "failed validation");
            out.witness = w;
        } else if (t1.status == SearchStatus::none || t2.status == SearchStatus::none) {
            throw internal_error("is_cobipartite_permutation: forbidden-free graph "
                                 "without a transitive orientation");
        }
    } catch (const budget_error&) {
        // witness absent; decision stands
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text output

std::string certificate_line(const Certificate& c) {
    std::ostringstream o;
    o << "CERTIFICATE family=" << c.family << " k=" << c.k << " vertices=";
    for (size_t i = 0; i < c.vertices.size(); ++i) {
        if (i) o << ',';
        o << c.vertices[i];
    }
    o << '\n';
    return o.str();
}

std::string verdict_to_text(const Verdict& v) {
    std::ostringstream o;
    o << (v.semi_transitive ? "SEMI-TRANSITIVE" : "NOT-SEMI-TRANSITIVE") << '\n';
    if (!v.notes.empty()) o << "# " << v.notes << '\n';
    if (v.witness) {
        o << "WITNESS\n" << orientation_to_text(*v.witness);
    } else if (v.certificate) {
        o << certificate_line(*v.certificate);
    }
    return o.str();
}

} // namespace wrco
