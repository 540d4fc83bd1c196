#include "tilt/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace tilt {

namespace {

std::vector<int> sweep_order(const MatchGraph& g, Sweep sweep) {
    std::vector<int> ord(g.cells.size());
    for (int i = 0; i < (int)ord.size(); ++i) ord[i] = i;
    if (sweep == Sweep::ColMajor) {
        std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
            const TriCell &ca = g.cells[a], &cb = g.cells[b];
            if (ca.key() != cb.key()) return ca.key() < cb.key();
            return ca.row < cb.row;
        });
    }
    return ord;
}

}  // namespace

BigInt count_matchings(const MatchGraph& g, Sweep sweep) {
    const int n = (int)g.cells.size();
    if (n == 0) return 1;
    if (g.up_count != g.down_count) return 0;

    const std::vector<int> ord = sweep_order(g, sweep);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[ord[i]] = i;

    // forward neighbors as rank offsets
    std::vector<std::vector<int>> fwd(n);
    for (int i = 0; i < n; ++i) {
        for (int nb : g.adj[i]) {
            if (nb < 0) continue;
            const int d = rank[nb] - rank[i];
            if (d > 0) {
                if (d >= 63) throw LimitExceeded("frontier span too wide for this sweep");
                fwd[rank[i]].push_back(d);
            }
        }
    }

    std::unordered_map<std::uint64_t, BigInt> states;
    states.emplace(0, 1);
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::uint64_t, BigInt> next;
        next.reserve(states.size());
        for (auto& [mask, cnt] : states) {
            if (mask & 1) {
                next[mask >> 1] += cnt;
                continue;
            }
            for (int d : fwd[i]) {
                if (mask >> d & 1) continue;
                next[(mask | (std::uint64_t(1) << d)) >> 1] += cnt;
            }
        }
        states = std::move(next);
        if (states.empty()) return 0;
    }
    auto it = states.find(0);
    return it == states.end() ? BigInt(0) : it->second;
}

BigInt count_region(const Region& r) { return count_matchings(dual_graph(r)); }

namespace {

bool tile_rec(const Region& cells, std::vector<bool>& used, std::size_t from, Tiling& acc,
              const std::function<bool(const Tiling&)>& visit,
              const std::map<TriCell, int>& pos) {
    while (from < cells.size() && used[from]) ++from;
    if (from == cells.size()) return visit(acc);
    const TriCell first = cells[from];
    used[from] = true;
    for (const TriCell& nb : neighbors(first)) {
        auto it = pos.find(nb);
        if (it == pos.end() || used[it->second]) continue;
        used[it->second] = true;
        acc.push_back(first.up ? make_lozenge(first, nb) : make_lozenge(nb, first));
        const bool go_on = tile_rec(cells, used, from + 1, acc, visit, pos);
        acc.pop_back();
        used[it->second] = false;
        if (!go_on) {
            used[from] = false;
            return false;
        }
    }
    used[from] = false;
    return true;
}

}  // namespace

void for_each_tiling(const Region& r, const std::function<bool(const Tiling&)>& visit) {
    std::map<TriCell, int> pos;
    for (int i = 0; i < (int)r.size(); ++i) pos[r[i]] = i;
    std::vector<bool> used(r.size(), false);
    Tiling acc;
    tile_rec(r, used, 0, acc, visit, pos);
}

std::vector<Tiling> enumerate_tilings(const Region& r, std::uint64_t limit) {
    if (limit < 1) throw InvalidParams("enumeration limit must be >= 1");
    std::vector<Tiling> out;
    bool over = false;
    for_each_tiling(r, [&](const Tiling& t) {
        if (out.size() == limit) {
            over = true;
            return false;
        }
        out.push_back(t);
        return true;
    });
    if (over) throw LimitExceeded("tiling count exceeds limit");
    return out;
}

namespace {

using Vert = std::pair<int, int>;                 // (s, row); Cartesian (s + row/2, row)
using DirEdge = std::pair<Vert, Vert>;

// Directed triangle sides, oriented consistently so that two adjacent cells
// traverse their shared edge in opposite directions.
std::array<DirEdge, 3> cell_edges(const TriCell& c) {
    const int r = c.row, s = c.col;
    if (c.up) {
        const Vert A{s, r}, L{s - 1, r + 1}, R{s, r + 1};
        return {DirEdge{A, L}, DirEdge{L, R}, DirEdge{R, A}};
    }
    const Vert B1{s, r}, B2{s + 1, r}, A{s, r + 1};
    return {DirEdge{B2, B1}, DirEdge{B1, A}, DirEdge{A, B2}};
}

int dir_index(const Vert& a, const Vert& b) {
    const int dc = b.first - a.first, dr = b.second - a.second;
    if (dc == 1 && dr == 0) return 0;
    if (dc == 0 && dr == 1) return 1;
    if (dc == -1 && dr == 1) return 2;
    if (dc == -1 && dr == 0) return 3;
    if (dc == 0 && dr == -1) return 4;
    if (dc == 1 && dr == -1) return 5;
    throw InvalidParams("not a lattice edge");
}

}  // namespace

std::vector<TriCell> boundary_cycle(const Region& r) {
    if (r.empty()) return {};
    std::map<DirEdge, TriCell> owner;
    for (const TriCell& c : r)
        for (const DirEdge& e : cell_edges(c)) owner.emplace(e, c);

    std::map<DirEdge, TriCell> boundary;
    for (const auto& [e, c] : owner)
        if (!owner.count({e.second, e.first})) boundary.emplace(e, c);

    // Walk the boundary polygon; at a pinch vertex take the sharpest turn
    // away from the reversed incoming direction so the walk hugs the cells.
    std::map<Vert, std::vector<DirEdge>> out_edges;
    for (const auto& [e, c] : boundary) out_edges[e.first].push_back(e);

    std::vector<TriCell> cyc;
    DirEdge cur = boundary.begin()->first;
    const DirEdge start = cur;
    std::size_t steps = 0;
    do {
        const TriCell& c = boundary.at(cur);
        if (cyc.empty() || !(cyc.back() == c)) cyc.push_back(c);
        const auto& cands = out_edges.at(cur.second);
        const DirEdge* next = nullptr;
        if (cands.size() == 1) {
            next = &cands[0];
        } else {
            const int back = dir_index(cur.second, cur.first);
            int best = 7;
            for (const DirEdge& e : cands) {
                const int turn = (back - dir_index(e.first, e.second) + 6) % 6;
                if (turn > 0 && turn < best) {
                    best = turn;
                    next = &e;
                }
            }
        }
        if (!next) throw InvalidParams("boundary walk stuck");
        cur = *next;
        if (++steps > 4 * boundary.size()) throw InvalidParams("boundary walk does not close");
    } while (!(cur == start));
    if (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
    return cyc;
}

std::vector<KuoQuad> boundary_quads(const Region& r, std::size_t max_quads) {
    const auto cyc = boundary_cycle(r);
    std::vector<KuoQuad> out;
    const std::size_t m = cyc.size();
    for (std::size_t i1 = 0; i1 < m && out.size() < max_quads; ++i1) {
        if (!cyc[i1].up) continue;
        for (std::size_t i2 = i1 + 1; i2 < m && out.size() < max_quads; ++i2) {
            if (cyc[i2].up || cyc[i2] == cyc[i1]) continue;
            for (std::size_t i3 = i2 + 1; i3 < m && out.size() < max_quads; ++i3) {
                if (!cyc[i3].up || cyc[i3] == cyc[i1]) continue;
                for (std::size_t i4 = i3 + 1; i4 < m && out.size() < max_quads; ++i4) {
                    if (cyc[i4].up || cyc[i4] == cyc[i2]) continue;
                    out.push_back(KuoQuad{cyc[i1], cyc[i2], cyc[i3], cyc[i4]});
                }
            }
        }
    }
    return out;
}

namespace {

BigInt count_without(const MatchGraph& g, const std::vector<TriCell>& removed) {
    Region rest;
    rest.reserve(g.cells.size());
    for (const TriCell& c : g.cells)
        if (std::find(removed.begin(), removed.end(), c) == removed.end()) rest.push_back(c);
    return count_matchings(dual_graph(rest));
}

}  // namespace

bool check_kuo_graph(const MatchGraph& g, const KuoQuad& q) {
    if (!q.u.up || !q.w.up || q.v.up || q.s.up) throw InvalidQuad("need u,w up and v,s down");
    const std::vector<TriCell> all{q.u, q.v, q.w, q.s};
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            if (all[i] == all[j]) throw InvalidQuad("quad vertices must be distinct");
    for (const TriCell& c : all)
        if (std::find(g.cells.begin(), g.cells.end(), c) == g.cells.end())
            throw InvalidQuad("quad vertex not in graph");

    const BigInt lhs = count_matchings(g) * count_without(g, all);
    const BigInt rhs = count_without(g, {q.u, q.v}) * count_without(g, {q.w, q.s}) +
                       count_without(g, {q.u, q.s}) * count_without(g, {q.v, q.w});
    return lhs == rhs;
}

bool check_kuo_region(const TiltedParams& p, KuoMethod method) {
    if (p.x < 1 || p.t < 1 || p.l() < 1)
        throw InvalidParams("recurrence check needs x >= 1, t >= 1, l >= 1");
    std::vector<long long> ad(p.a.begin(), p.a.end() - 1);

    auto count = [&](long long x, long long t, const std::vector<long long>& a) {
        const TiltedParams q = TiltedParams::make(p.k, x, t, p.h, a);
        if (method == KuoMethod::ClosedForm) return count_tilted(q);
        return count_region(build_tilted_region(q));
    };

    const BigInt lhs = count(p.x, p.t, p.a) * count(p.x, p.t - 1, ad);
    const BigInt rhs = count(p.x, p.t, ad) * count(p.x, p.t - 1, p.a) +
                       count(p.x + 1, p.t - 1, ad) * count(p.x - 1, p.t, p.a);
    return lhs == rhs;
}

}  // namespace tilt
