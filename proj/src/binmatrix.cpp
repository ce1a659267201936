#include "wrco/binmatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace wrco {

// ---------------------------------------------------------------------------
// Basics

BinaryMatrix BinaryMatrix::dense(const std::vector<std::vector<int>>& cells) {
    BinaryMatrix m;
    m.row_count = static_cast<int>(cells.size());
    m.col_count = cells.empty() ? 0 : static_cast<int>(cells[0].size());
    m.rows.resize(m.row_count);
    for (int i = 0; i < m.row_count; ++i) {
        if (static_cast<int>(cells[i].size()) != m.col_count)
            throw input_error("dense matrix: ragged row");
        for (int j = 0; j < m.col_count; ++j)
            if (cells[i][j]) m.rows[i].push_back(j);
    }
    return m;
}

long long BinaryMatrix::ones() const {
    long long c = 0;
    for (const auto& r : rows) c += static_cast<long long>(r.size());
    return c;
}

bool BinaryMatrix::at(int i, int j) const {
    const auto& r = rows[i];
    return std::binary_search(r.begin(), r.end(), j);
}

void BinaryMatrix::set(int i, int j) {
    auto& r = rows[i];
    auto it = std::lower_bound(r.begin(), r.end(), j);
    if (it == r.end() || *it != j) r.insert(it, j);
}

std::vector<std::vector<int>> BinaryMatrix::columns() const {
    std::vector<std::vector<int>> cols(col_count);
    for (int i = 0; i < row_count; ++i)
        for (int j : rows[i]) cols[j].push_back(i);
    return cols;
}

bool BinaryMatrix::has_trivial_row() const {
    for (int i = 0; i < row_count; ++i)
        if (row_trivial(i)) return true;
    return false;
}
bool BinaryMatrix::has_all_zero_row() const {
    for (const auto& r : rows)
        if (r.empty()) return true;
    return false;
}
bool BinaryMatrix::has_all_one_row() const {
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) == col_count && col_count > 0) return true;
    return false;
}

BinaryMatrix transpose(const BinaryMatrix& m) {
    BinaryMatrix t(m.col_count, m.row_count);
    t.rows = m.columns();
    return t;
}

BinaryMatrix row_complement(const BinaryMatrix& m, const std::vector<bool>& mask) {
    if (static_cast<int>(mask.size()) != m.row_count)
        throw input_error("row_complement: mask length " + std::to_string(mask.size()) +
                          " != row count " + std::to_string(m.row_count));
    BinaryMatrix out(m.row_count, m.col_count);
    for (int i = 0; i < m.row_count; ++i) {
        if (!mask[i]) {
            out.rows[i] = m.rows[i];
            continue;
        }
        const auto& r = m.rows[i];
        size_t p = 0;
        for (int j = 0; j < m.col_count; ++j) {
            if (p < r.size() && r[p] == j) ++p;
            else out.rows[i].push_back(j);
        }
    }
    return out;
}

BinaryMatrix complement(const BinaryMatrix& m) {
    return row_complement(m, std::vector<bool>(m.row_count, true));
}

BinaryMatrix add_empty_column(const BinaryMatrix& m) {
    BinaryMatrix out = m;
    out.col_count += 1;
    return out;
}

// ---------------------------------------------------------------------------
// Patterns

namespace {

BinaryMatrix mik(int k) {
    if (k < 3) throw input_error("MIk requires k >= 3");
    BinaryMatrix m(k, k);
    for (int i = 0; i < k - 1; ++i) m.rows[i] = {i, i + 1};
    m.rows[k - 1] = {0, k - 1};
    return m;
}

} // namespace

BinaryMatrix generate_pattern(const PatternId& id) {
    using N = PatternId::Name;
    switch (id.name) {
        case N::ZA:
            return BinaryMatrix::dense({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 0, 0}});
        case N::ZB:
            return BinaryMatrix::dense({{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 0, 1, 0}});
        case N::ZC:
            return BinaryMatrix::dense({{1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}});
        case N::ZD:
            return BinaryMatrix::dense({{1, 0, 0, 1}, {1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 0, 0}});
        case N::coZA:
            return complement(generate_pattern({N::ZA, 0}));
        case N::coZC:
            return complement(generate_pattern({N::ZC, 0}));
        case N::ZAT:
        case N::ZBT:
        case N::ZCT:
        case N::ZDT:
        case N::coZAT:
        case N::coZCT: {
            N base = static_cast<N>(static_cast<int>(id.name) - 6);
            return transpose(generate_pattern({base, 0}));
        }
        case N::MIk:
            return mik(id.k);
        case N::MIkStar:
            return add_empty_column(mik(id.k));
        case N::coMIkStar:
            return complement(add_empty_column(mik(id.k)));
        case N::MIkT:
            return transpose(mik(id.k));
        case N::MIkStarT:
            return transpose(add_empty_column(mik(id.k)));
        case N::coMIkStarT:
            return transpose(complement(add_empty_column(mik(id.k))));
    }
    throw input_error("generate_pattern: invalid pattern id");
}

std::string pattern_name(const PatternId& id) {
    using N = PatternId::Name;
    static const std::map<N, std::string> names = {
        {N::ZA, "ZA"},           {N::ZB, "ZB"},         {N::ZC, "ZC"},
        {N::ZD, "ZD"},           {N::coZA, "coZA"},     {N::coZC, "coZC"},
        {N::ZAT, "ZAT"},         {N::ZBT, "ZBT"},       {N::ZCT, "ZCT"},
        {N::ZDT, "ZDT"},         {N::coZAT, "coZAT"},   {N::coZCT, "coZCT"},
        {N::MIk, "MIk"},         {N::MIkStar, "MIkStar"}, {N::coMIkStar, "coMIkStar"},
        {N::MIkT, "MIkT"},       {N::MIkStarT, "MIkStarT"}, {N::coMIkStarT, "coMIkStarT"}};
    std::string s = names.at(id.name);
    if (id.k > 0) s += "(" + std::to_string(id.k) + ")";
    return s;
}

PatternId parse_pattern_name(const std::string& name, int k) {
    using N = PatternId::Name;
    static const std::map<std::string, N> names = {
        {"ZA", N::ZA},           {"ZB", N::ZB},         {"ZC", N::ZC},
        {"ZD", N::ZD},           {"coZA", N::coZA},     {"coZC", N::coZC},
        {"ZAT", N::ZAT},         {"ZBT", N::ZBT},       {"ZCT", N::ZCT},
        {"ZDT", N::ZDT},         {"coZAT", N::coZAT},   {"coZCT", N::coZCT},
        {"MIk", N::MIk},         {"MIkStar", N::MIkStar}, {"coMIkStar", N::coMIkStar},
        {"MIkT", N::MIkT},       {"MIkStarT", N::MIkStarT}, {"coMIkStarT", N::coMIkStarT}};
    auto it = names.find(name);
    if (it == names.end()) throw input_error("unknown pattern name: " + name);
    return {it->second, k};
}

const std::vector<PatternId>& fcco_finite() {
    using N = PatternId::Name;
    static const std::vector<PatternId> fam = {
        {N::ZA, 0},   {N::ZB, 0},   {N::ZC, 0},   {N::ZD, 0},   {N::coZA, 0},  {N::coZC, 0},
        {N::ZAT, 0},  {N::ZBT, 0},  {N::ZCT, 0},  {N::ZDT, 0},  {N::coZAT, 0}, {N::coZCT, 0}};
    return fam;
}

// ---------------------------------------------------------------------------
// Bracelets

std::vector<std::string> bracelets(int k) {
    if (k < 3) throw input_error("bracelets: k must be >= 3");
    if (k == 3) return {"000", "111"};
    if (k > 24) throw budget_error("bracelets: k too large");
    std::vector<std::string> out;
    for (unsigned v = 0; v < (1u << k); ++v) {
        std::string s(k, '0');
        for (int i = 0; i < k; ++i)
            if (v & (1u << i)) s[k - 1 - i] = '1';
        bool minimal = true;
        std::string rev(s.rbegin(), s.rend());
        for (int r = 0; r < k && minimal; ++r) {
            if (s.substr(r) + s.substr(0, r) < s) minimal = false;
            if (rev.substr(r) + rev.substr(0, r) < s) minimal = false;
        }
        if (minimal) out.push_back(s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Consecutive / circular ones

bool verify_consecutive_ones(const BinaryMatrix& m, const std::vector<int>& col_order) {
    std::vector<int> pos(m.col_count);
    for (int r = 0; r < m.col_count; ++r) pos[col_order[r]] = r;
    for (const auto& row : m.rows) {
        if (row.empty()) continue;
        int lo = m.col_count, hi = -1;
        for (int j : row) {
            lo = std::min(lo, pos[j]);
            hi = std::max(hi, pos[j]);
        }
        if (hi - lo + 1 != static_cast<int>(row.size())) return false;
    }
    return true;
}

bool verify_circular_ones(const BinaryMatrix& m, const std::vector<int>& col_order) {
    int n = m.col_count;
    std::vector<int> pos(n);
    for (int r = 0; r < n; ++r) pos[col_order[r]] = r;
    std::vector<char> mark(n, 0);
    for (const auto& row : m.rows) {
        int s = static_cast<int>(row.size());
        if (s == 0 || s == n) continue;
        for (int j : row) mark[pos[j]] = 1;
        // circular arc iff exactly one boundary where a 1 is followed by a 0
        int breaks = 0;
        for (int j : row)
            if (!mark[(pos[j] + 1) % n]) ++breaks;
        for (int j : row) mark[pos[j]] = 0;
        if (breaks != 1) return false;
    }
    return true;
}

namespace {

// Exact consecutive-ones backtracking: place columns left to right. A row
// "closes" the first time a placed column misses it after it has started; a
// closed row must already be complete.
struct C1pSearch {
    const BinaryMatrix& m;
    std::vector<std::vector<int>> col_rows; // column -> rows holding a 1 there
    std::vector<int> placed;                // per row
    std::vector<char> started, closed;
    std::vector<int> order;
    std::vector<char> used;
    std::vector<int> open_rows; // started, not closed, not complete

    explicit C1pSearch(const BinaryMatrix& mm) : m(mm) {
        col_rows.resize(m.col_count);
        for (int i = 0; i < m.row_count; ++i)
            for (int j : m.rows[i]) col_rows[j].push_back(i);
        placed.assign(m.row_count, 0);
        started.assign(m.row_count, 0);
        closed.assign(m.row_count, 0);
        used.assign(m.col_count, 0);
    }

    bool place(int depth) {
        if (depth == m.col_count) return true;
        for (int c = 0; c < m.col_count; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int r : col_rows[c])
                if (closed[r]) { ok = false; break; }
            if (!ok) continue;
            // rows that would close now: started, incomplete, missing c
            std::vector<int> closing;
            for (int r = 0; r < m.row_count; ++r) {
                if (!started[r] || closed[r]) continue;
                if (placed[r] == static_cast<int>(m.rows[r].size())) continue;
                if (!m.at(r, c)) { ok = false; break; } // would close while incomplete
            }
            if (!ok) continue;
            // commit
            std::vector<int> newly_closed;
            for (int r = 0; r < m.row_count; ++r) {
                if (started[r] && !closed[r] &&
                    placed[r] == static_cast<int>(m.rows[r].size()) && !m.at(r, c)) {
                    closed[r] = 1;
                    newly_closed.push_back(r);
                }
            }
            std::vector<int> newly_started;
            for (int r : col_rows[c]) {
                ++placed[r];
                if (!started[r]) {
                    started[r] = 1;
                    newly_started.push_back(r);
                }
            }
            used[c] = 1;
            order.push_back(c);
            if (place(depth + 1)) return true;
            order.pop_back();
            used[c] = 0;
            for (int r : col_rows[c]) --placed[r];
            for (int r : newly_started) started[r] = 0;
            for (int r : newly_closed) closed[r] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> has_consecutive_ones(const BinaryMatrix& m) {
    std::vector<int> identity(m.col_count);
    std::iota(identity.begin(), identity.end(), 0);
    if (verify_consecutive_ones(m, identity)) return identity;
    C1pSearch search(m);
    if (search.place(0)) return search.order;
    return std::nullopt;
}

std::optional<std::vector<int>> has_circular_ones(const BinaryMatrix& m) {
    std::vector<int> identity(m.col_count);
    std::iota(identity.begin(), identity.end(), 0);
    if (m.col_count <= 2) return identity;
    if (verify_circular_ones(m, identity)) return identity;
    // Column-zeroing reduction: complement all rows holding a 1 in the first
    // column of a minimum-size nonempty row; then circular ones for m is
    // exactly consecutive ones for the reduced matrix, same witness order.
    int best = -1;
    for (int i = 0; i < m.row_count; ++i) {
        if (m.rows[i].empty()) continue;
        if (best < 0 || m.rows[i].size() < m.rows[best].size()) best = i;
    }
    int c = best < 0 ? 0 : m.rows[best][0];
    std::vector<bool> mask(m.row_count, false);
    for (int i = 0; i < m.row_count; ++i)
        if (m.at(i, c)) mask[i] = true;
    BinaryMatrix reduced = row_complement(m, mask);
    auto order = has_consecutive_ones(reduced);
    if (!order) return std::nullopt;
    if (!verify_circular_ones(m, *order))
        throw internal_error("has_circular_ones: reduction witness failed verification");
    return order;
}

// ---------------------------------------------------------------------------
// Configuration containment

std::optional<std::pair<std::vector<int>, std::vector<int>>>
contains_configuration(const BinaryMatrix& m, const BinaryMatrix& pattern) {
    int p = pattern.row_count, q = pattern.col_count;
    if (p > m.row_count || q > m.col_count) return std::nullopt;
    if (q > 30) throw input_error("contains_configuration: pattern too wide");

    // Column subset of m (ascending), then column bijections, then the
    // smallest available rows per required row value.
    std::vector<int> csub(q);
    std::iota(csub.begin(), csub.end(), 0);
    auto next_combination = [&](std::vector<int>& comb, int n) {
        int k = static_cast<int>(comb.size());
        for (int i = k - 1; i >= 0; --i) {
            if (comb[i] < n - (k - i)) {
                ++comb[i];
                for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    do {
        // keys of m's rows restricted to csub (bit t = presence of csub[t])
        std::map<uint32_t, std::vector<int>> avail;
        for (int i = 0; i < m.row_count; ++i) {
            uint32_t key = 0;
            for (int t = 0; t < q; ++t)
                if (m.at(i, csub[t])) key |= (1u << t);
            avail[key].push_back(i);
        }
        // bijection: pattern column j corresponds to csub[perm[j]]
        std::vector<int> perm(q);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::map<uint32_t, int> need;
            std::vector<uint32_t> pkeys(p, 0);
            for (int i = 0; i < p; ++i) {
                uint32_t key = 0;
                for (int j : pattern.rows[i]) key |= (1u << perm[j]);
                pkeys[i] = key;
                ++need[key];
            }
            bool ok = true;
            for (auto& [key, cnt] : need) {
                auto it = avail.find(key);
                if (it == avail.end() || static_cast<int>(it->second.size()) < cnt) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                std::vector<int> rset;
                std::map<uint32_t, int> taken;
                for (int i = 0; i < p; ++i)
                    rset.push_back(avail[pkeys[i]][taken[pkeys[i]]++]);
                std::sort(rset.begin(), rset.end());
                return std::make_pair(rset, csub);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    } while (next_combination(csub, m.col_count));
    return std::nullopt;
}

MikStarHit find_mik_star(const BinaryMatrix& m, int cap) {
    using N = PatternId::Name;
    MikStarHit hit;
    bool capped = false;
    for (int k = 3;; ++k) {
        bool any_feasible = false;
        for (N name : {N::MIkStar, N::coMIkStar, N::MIkStarT, N::coMIkStarT}) {
            bool transposed = (name == N::MIkStarT || name == N::coMIkStarT);
            int pr = transposed ? k + 1 : k;
            int pc = transposed ? k : k + 1;
            if (pr > m.row_count || pc > m.col_count) continue;
            if (pc > cap) {
                capped = true;
                continue;
            }
            any_feasible = true;
            PatternId pid{name, k};
            auto found = contains_configuration(m, generate_pattern(pid));
            if (found) {
                hit.status = MikStarHit::Status::found;
                hit.pattern = pid;
                hit.row_set = found->first;
                hit.col_set = found->second;
                return hit;
            }
        }
        if (!any_feasible) break;
    }
    hit.status = capped ? MikStarHit::Status::unknown : MikStarHit::Status::none;
    return hit;
}

// ---------------------------------------------------------------------------
// Biorders

namespace {

bool is_permutation_of(const std::vector<int>& v, int n) {
    if (static_cast<int>(v.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : v) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

// Endpoints of a row as a circular interval of col_order; nullopt if not one.
std::optional<Biorder::Endpoints> row_endpoints(const std::vector<int>& row,
                                                const std::vector<int>& pos,
                                                const std::vector<int>& col_order) {
    int n = static_cast<int>(pos.size());
    int s = static_cast<int>(row.size());
    if (s == 0 || s == n) return std::nullopt; // trivial: no endpoints
    std::vector<int> ps;
    ps.reserve(s);
    for (int j : row) ps.push_back(pos[j]);
    std::sort(ps.begin(), ps.end());
    int gaps = 0, gap_at = -1;
    for (int i = 0; i + 1 < s; ++i)
        if (ps[i + 1] != ps[i] + 1) {
            ++gaps;
            gap_at = i;
        }
    Biorder::Endpoints ep;
    if (gaps == 0) {
        ep.d_pos = ps[0];
        ep.e_pos = ps[s - 1];
        ep.wraps = false;
    } else if (gaps == 1 && ps[0] == 0 && ps[s - 1] == n - 1) {
        ep.d_pos = ps[gap_at + 1];
        ep.e_pos = ps[gap_at];
        ep.wraps = true;
    } else {
        return std::nullopt; // not a circular interval
    }
    ep.d = col_order[ep.d_pos];
    ep.e = col_order[ep.e_pos];
    ep.f_pos = ep.wraps ? ep.e_pos + n : ep.e_pos;
    return ep;
}

} // namespace

std::optional<Biorder> try_biorder(const BinaryMatrix& m,
                                   const std::vector<int>& row_order,
                                   const std::vector<int>& col_order) {
    if (!is_permutation_of(row_order, m.row_count))
        throw input_error("biorder: row_order is not a permutation of the rows");
    if (!is_permutation_of(col_order, m.col_count))
        throw input_error("biorder: col_order is not a permutation of the columns");
    Biorder b;
    b.row_order = row_order;
    b.col_order = col_order;
    b.endpoints.resize(m.row_count);
    std::vector<int> pos(m.col_count);
    for (int r = 0; r < m.col_count; ++r) pos[col_order[r]] = r;
    for (int i = 0; i < m.row_count; ++i) {
        if (m.row_trivial(i)) continue;
        auto ep = row_endpoints(m.rows[i], pos, col_order);
        if (!ep) return std::nullopt;
        b.endpoints[i] = *ep;
    }
    return b;
}

McCheck check_monotone_circular_rows(const BinaryMatrix& m, const Biorder& b) {
    int n = m.col_count;
    std::vector<const Biorder::Endpoints*> eps;
    for (int i : b.row_order) {
        if (m.row_trivial(i)) continue;
        if (!b.endpoints[i])
            return {false, "row-not-circular-interval"};
        eps.push_back(&*b.endpoints[i]);
    }
    int p = static_cast<int>(eps.size());
    for (int i = 0; i + 1 < p; ++i)
        if (eps[i]->d_pos > eps[i + 1]->d_pos)
            return {false, "left-endpoints-not-monotone"};
    for (int i = 0; i + 1 < p; ++i)
        if (eps[i]->f_pos > eps[i + 1]->f_pos)
            return {false, "unwrapped-right-endpoints-not-monotone"};
    if (p > 0) {
        bool wrap_start = eps[0]->f_pos == eps[0]->e_pos + n;
        bool plain_start = eps[0]->f_pos == eps[0]->e_pos &&
                           eps[p - 1]->f_pos <= eps[0]->e_pos + n;
        if (!wrap_start && !plain_start)
            return {false, "endpoint-boundary-condition"};
    }
    return {true, ""};
}

McCheck check_monotone_circular(const BinaryMatrix& m, const Biorder& b) {
    if (m.has_trivial_row())
        throw input_error("check_monotone_circular: matrix has a trivial row");
    return check_monotone_circular_rows(m, b);
}

// For a fixed column order, sorting the rows by (d_pos, f_pos) is the
// canonical candidate: it finds a monotone circular row order whenever one
// exists for that column order.
std::optional<Biorder> greedy_mc_for_col_order(const BinaryMatrix& m,
                                               const std::vector<int>& col_order) {
    std::vector<int> pos(m.col_count);
    for (int r = 0; r < m.col_count; ++r) pos[col_order[r]] = r;
    std::vector<std::tuple<int, int, int>> keyed; // (d_pos, f_pos, row)
    std::vector<int> trivial;
    Biorder b;
    b.col_order = col_order;
    b.endpoints.resize(m.row_count);
    for (int i = 0; i < m.row_count; ++i) {
        if (m.row_trivial(i)) {
            trivial.push_back(i);
            continue;
        }
        auto ep = row_endpoints(m.rows[i], pos, col_order);
        if (!ep) return std::nullopt;
        b.endpoints[i] = *ep;
        keyed.emplace_back(ep->d_pos, ep->f_pos, i);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [d, f, i] : keyed) b.row_order.push_back(i);
    // trivial rows (only relevant to Case-2 style callers) go last
    b.row_order.insert(b.row_order.end(), trivial.begin(), trivial.end());
    auto check = check_monotone_circular_rows(m, b);
    if (!check.ok) return std::nullopt;
    return b;
}

std::optional<Biorder> search_monotone_circular(const BinaryMatrix& m, int cap,
                                                long long budget) {
    if (m.has_trivial_row())
        throw input_error("search_monotone_circular: matrix has a trivial row");
    std::vector<int> col_order(m.col_count);
    std::iota(col_order.begin(), col_order.end(), 0);
    if (auto b = greedy_mc_for_col_order(m, col_order)) return b; // identity fast path
    if (m.col_count > cap)
        throw budget_error("search_monotone_circular: column count exceeds cap " +
                           std::to_string(cap));
    long long nodes = 0;
    while (std::next_permutation(col_order.begin(), col_order.end())) {
        if (++nodes > budget)
            throw budget_error("search_monotone_circular: budget exhausted");
        if (auto b = greedy_mc_for_col_order(m, col_order)) return b;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// CCO

namespace {

bool positions_circular(std::vector<int>& ps, int n) {
    int s = static_cast<int>(ps.size());
    if (s == 0 || s == n) return true;
    std::sort(ps.begin(), ps.end());
    int gaps = 0;
    for (int i = 0; i + 1 < s; ++i)
        if (ps[i + 1] != ps[i] + 1) ++gaps;
    if (gaps == 0) return true;
    return gaps == 1 && ps[0] == 0 && ps[s - 1] == n - 1;
}

// Every pairwise difference r - s of the given index sets is a circular
// interval under pos (rank array over n elements).
bool differences_circular(const std::vector<std::vector<int>>& sets,
                          const std::vector<int>& pos, int n) {
    int m = static_cast<int>(sets.size());
    std::vector<std::vector<char>> member(m, std::vector<char>(n, 0));
    for (int i = 0; i < m; ++i)
        for (int j : sets[i]) member[i][j] = 1;
    std::vector<int> ps;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            ps.clear();
            for (int j : sets[a])
                if (!member[b][j]) ps.push_back(pos[j]);
            if (!positions_circular(ps, n)) return false;
        }
    return true;
}

// An order of "the other side" under which every line and every pairwise
// line difference is a circular interval (D-circular witness order).
bool d_circular_order(const std::vector<std::vector<int>>& sets, int n,
                      const std::vector<int>& order) {
    std::vector<int> pos(n);
    for (int r = 0; r < n; ++r) pos[order[r]] = r;
    std::vector<int> ps;
    for (const auto& s : sets) {
        ps.clear();
        for (int j : s) ps.push_back(pos[j]);
        if (!positions_circular(ps, n)) return false;
    }
    return differences_circular(sets, pos, n);
}

bool circularly_monotone(const std::vector<int>& seq) {
    int p = static_cast<int>(seq.size());
    if (p <= 1) return true;
    int desc = 0;
    for (int i = 0; i < p; ++i)
        if (seq[i] > seq[(i + 1) % p]) ++desc;
    return desc <= 1;
}

} // namespace

bool valid_cco_biorder(const BinaryMatrix& m, const Biorder& b) {
    int nr = m.row_count, nc = m.col_count;
    if (!is_permutation_of(b.row_order, nr) || !is_permutation_of(b.col_order, nc))
        return false;
    std::vector<int> cpos(nc), rpos(nr);
    for (int r = 0; r < nc; ++r) cpos[b.col_order[r]] = r;
    for (int r = 0; r < nr; ++r) rpos[b.row_order[r]] = r;
    // rows circular intervals of ⪯_c
    std::vector<int> ps;
    for (int i = 0; i < nr; ++i) {
        ps.clear();
        for (int j : m.rows[i]) ps.push_back(cpos[j]);
        if (!positions_circular(ps, nc)) return false;
    }
    // columns circular intervals of ⪯_r
    auto cols = m.columns();
    for (int j = 0; j < nc; ++j) {
        ps.clear();
        for (int i : cols[j]) ps.push_back(rpos[i]);
        if (!positions_circular(ps, nr)) return false;
    }
    // endpoint sequences of nontrivial rows circularly monotone
    std::vector<int> dseq, eseq;
    for (int i : b.row_order) {
        if (m.row_trivial(i)) continue;
        auto ep = row_endpoints(m.rows[i], cpos, b.col_order);
        if (!ep) return false;
        dseq.push_back(ep->d_pos);
        eseq.push_back(ep->e_pos);
    }
    if (!circularly_monotone(dseq) || !circularly_monotone(eseq)) return false;
    // explicit pairwise-difference circularity, both sides
    if (!differences_circular(m.rows, cpos, nc)) return false;
    if (!differences_circular(cols, rpos, nr)) return false;
    return true;
}

CcoResult is_cco(const BinaryMatrix& m) {
    CcoResult res;
    BinaryMatrix mt = transpose(m);
    // Fast path: on matrices without trivial lines, a monotone circular
    // biorder on each side certifies the doubly D-circular property.
    if (m.row_count > 0 && m.col_count > 0 && !m.has_trivial_row() && !mt.has_trivial_row()) {
        std::vector<int> idc(m.col_count), idr(m.row_count);
        std::iota(idc.begin(), idc.end(), 0);
        std::iota(idr.begin(), idr.end(), 0);
        if (greedy_mc_for_col_order(m, idc) && greedy_mc_for_col_order(mt, idr)) {
            res.cco = true;
            return res;
        }
    }
    if (!has_circular_ones(m)) {
        res.cco = false;
        res.evidence.kind = CcoEvidence::Kind::rows_not_circular;
        return res;
    }
    if (!has_circular_ones(mt)) {
        res.cco = false;
        res.evidence.kind = CcoEvidence::Kind::cols_not_circular;
        return res;
    }
    for (const auto& pid : fcco_finite()) {
        BinaryMatrix pat = generate_pattern(pid);
        if (pat.row_count > m.row_count || pat.col_count > m.col_count) continue;
        if (auto hit = contains_configuration(m, pat)) {
            res.cco = false;
            res.evidence.kind = CcoEvidence::Kind::configuration;
            res.evidence.pattern = pid;
            res.evidence.row_set = hit->first;
            res.evidence.col_set = hit->second;
            return res;
        }
    }
    res.cco = true;
    return res;
}

CcoBiorderResult search_cco_biorder(const BinaryMatrix& m, int cap, long long budget) {
    CcoBiorderResult res;
    if (m.row_count > cap || m.col_count > cap) {
        res.status = SearchStatus::budget;
        return res;
    }
    auto cols = m.columns();
    long long nodes = 0;
    auto spend = [&](long long c) {
        nodes += c;
        if (nodes > budget) throw budget_error("search_cco_biorder: budget exhausted");
    };
    // Candidate column orders: D-circular witness orders for the rows.
    std::vector<std::vector<int>> col_cands, row_cands;
    std::vector<int> order(m.col_count);
    std::iota(order.begin(), order.end(), 0);
    do {
        spend(1);
        if (d_circular_order(m.rows, m.col_count, order)) col_cands.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    if (col_cands.empty()) return res; // authoritative none
    order.assign(m.row_count, 0);
    std::iota(order.begin(), order.end(), 0);
    do {
        spend(1);
        if (d_circular_order(cols, m.row_count, order)) row_cands.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    if (row_cands.empty()) return res; // authoritative none
    for (const auto& ro : row_cands)
        for (const auto& co : col_cands) {
            spend(1);
            auto b = try_biorder(m, ro, co);
            if (!b) continue;
            if (valid_cco_biorder(m, *b)) {
                res.status = SearchStatus::found;
                res.biorder = std::move(b);
                return res;
            }
        }
    return res; // none (the equivalence sweeps guard this path)
}

// ---------------------------------------------------------------------------
// Text format

std::string matrix_to_text(const BinaryMatrix& m) {
    std::ostringstream out;
    out << m.row_count << ' ' << m.col_count << '\n';
    for (const auto& row : m.rows) {
        for (size_t t = 0; t < row.size(); ++t) {
            if (t) out << ' ';
            out << row[t] + 1;
        }
        out << '\n';
    }
    return out.str();
}

BinaryMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int mrows = -1, ncols = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        if (ls >> mrows) {
            if (!(ls >> ncols)) throw input_error("matrix text: header needs \"m n\"");
            break;
        }
    }
    if (mrows < 0 || ncols < 0) throw input_error("matrix text: missing header \"m n\"");
    BinaryMatrix m(mrows, ncols);
    for (int i = 0; i < mrows; ++i) {
        if (!std::getline(in, line))
            throw input_error("matrix text: expected " + std::to_string(mrows) +
                              " row lines, got " + std::to_string(i));
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        int j;
        while (ls >> j) {
            if (j < 1 || j > ncols)
                throw input_error("matrix text: column index " + std::to_string(j) +
                                  " out of range in row " + std::to_string(i + 1));
            m.rows[i].push_back(j - 1);
        }
        std::sort(m.rows[i].begin(), m.rows[i].end());
        m.rows[i].erase(std::unique(m.rows[i].begin(), m.rows[i].end()), m.rows[i].end());
    }
    return m;
}

} // namespace wrco
