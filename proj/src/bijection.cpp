#include "tilt/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tilt {

namespace {

using CellSet = std::set<TriCell>;

// Partner across the edge family of a lozenge class; an involution.
TriCell class_neighbor(const TriCell& c, Orient o) {
    return neighbors(c)[static_cast<int>(o)];
}

void validate_tiling(const Region& region, const Tiling& t) {
    CellSet seen;
    for (const Lozenge& lz : t) {
        const Lozenge fresh = make_lozenge(lz.u, lz.d);  // rechecks adjacency + orientation
        if (fresh.orient != lz.orient) throw InvalidTiling("lozenge orientation tag is wrong");
        if (!seen.insert(lz.u).second || !seen.insert(lz.d).second)
            throw InvalidTiling("overlapping lozenges");
    }
    if (seen.size() != region.size() ||
        !std::equal(seen.begin(), seen.end(), region.begin(), region.end()))
        throw InvalidTiling("tiling does not cover the region exactly");
}

// Chains of non-background lozenges linked across background-class edges;
// every path runs boundary to boundary.
std::vector<std::vector<Lozenge>> extract_paths(const CellSet& cells, const Tiling& t,
                                                Orient bg) {
    std::map<TriCell, const Lozenge*> owner;
    for (const Lozenge& lz : t) {
        if (lz.orient == bg) continue;
        owner[lz.u] = &lz;
        owner[lz.d] = &lz;
    }
    std::vector<std::vector<Lozenge>> paths;
    std::set<const Lozenge*> used;
    for (const Lozenge& lz : t) {
        if (lz.orient == bg || used.count(&lz)) continue;
        for (const TriCell start : {lz.u, lz.d}) {
            if (cells.count(class_neighbor(start, bg))) continue;  // not a boundary end
            std::vector<Lozenge> path;
            const Lozenge* cur = &lz;
            TriCell enter = start;
            while (true) {
                path.push_back(*cur);
                used.insert(cur);
                const TriCell exit = (enter == cur->d) ? cur->u : cur->d;
                const TriCell nxt = class_neighbor(exit, bg);
                if (!cells.count(nxt)) break;
                auto it = owner.find(nxt);
                if (it == owner.end()) break;  // blocked by a background lozenge
                cur = it->second;
                enter = nxt;
            }
            paths.push_back(std::move(path));
            break;
        }
    }
    return paths;
}

bool lozenge_has(const Lozenge& lz, const TriCell& c) { return lz.u == c || lz.d == c; }

// Orients so the path end containing c comes first; nullptr if no path does.
std::vector<Lozenge>* path_from(std::vector<std::vector<Lozenge>>& paths, const TriCell& c) {
    for (auto& p : paths) {
        if (lozenge_has(p.front(), c)) return &p;
        if (lozenge_has(p.back(), c)) {
            std::reverse(p.begin(), p.end());
            return &p;
        }
    }
    return nullptr;
}

Tiling sorted_tiling(Tiling t) {
    std::sort(t.begin(), t.end());
    return t;
}

// ---- first correspondence -------------------------------------------------

struct Cor1Ctx {
    TiltedParams p;
    Region region;
    CellSet cells;
    std::vector<TriCell> corner;     // corner[i]: staircase corner of level a_{i+1}
    std::vector<long long> labeled;  // vertical lozenges on path i+1
    std::vector<long long> lefts;    // left lozenges on path i+1
};

Cor1Ctx make_cor1(const TiltedParams& p) {
    Cor1Ctx ctx;
    ctx.p = p;
    ctx.region = build_tilted_region(p);
    ctx.cells = CellSet(ctx.region.begin(), ctx.region.end());
    auto corners = staircase_corners(p);
    for (long long i = 1; i <= p.l(); ++i) {
        ctx.corner.push_back(corners.at(p.a[i - 1]));
        ctx.labeled.push_back(p.t + (p.k + 1) * p.a[i - 1] - p.k - i);
        ctx.lefts.push_back(p.x + p.h - (p.a[i - 1] - i));
    }
    return ctx;
}

std::vector<long long> expected_shape_cor1(const Cor1Ctx& ctx) {
    std::vector<long long> shape;
    for (long long j = 1; j <= ctx.p.l(); ++j) shape.push_back(ctx.labeled[ctx.p.l() - j]);
    return shape;
}

// Path of path_idx from its corner: 'L' moves one cell left, 'V' one step
// down-left; returns false if it leaves the region or collides.
bool build_path_cor1(const Cor1Ctx& ctx, long long path_idx,
                     const std::vector<long long>& labels, CellSet& used,
                     std::vector<Lozenge>* out) {
    const TriCell corner = ctx.corner[path_idx - 1];
    int r = corner.row, c = corner.col;
    long long prev = path_idx;
    std::vector<Lozenge> lozs;
    auto step = [&](bool left) {
        const TriCell u{r, c, true};
        const TriCell d = left ? TriCell{r, c - 1, false} : TriCell{r + 1, c - 1, false};
        if (!ctx.cells.count(u) || !ctx.cells.count(d) || used.count(u) || used.count(d))
            return false;
        lozs.push_back(make_lozenge(u, d));
        if (left) --c;
        else {
            ++r;
            --c;
        }
        return true;
    };
    for (long long y : labels) {
        for (long long q = prev; q < y; ++q)
            if (!step(true)) return false;
        if (!step(false)) return false;
        prev = y;
    }
    for (long long q = prev; q < path_idx + ctx.lefts[path_idx - 1]; ++q)
        if (!step(true)) return false;
    if (ctx.cells.count(TriCell{r, c, true})) return false;  // must exit the region
    for (const Lozenge& lz : lozs) {
        used.insert(lz.u);
        used.insert(lz.d);
    }
    if (out) out->insert(out->end(), lozs.begin(), lozs.end());
    return true;
}

void unbuild(CellSet& used, const std::vector<Lozenge>& lozs, std::size_t from) {
    for (std::size_t i = from; i < lozs.size(); ++i) {
        used.erase(lozs[i].u);
        used.erase(lozs[i].d);
    }
}

// Backtracks over interleavings of left/vertical steps for paths
// path_idx..l; label sequences correspond one-to-one to interleavings.
// stop_after_first turns the count into an existence test.
void count_paths_cor1(const Cor1Ctx& ctx, long long path_idx, CellSet& used, BigInt& total,
                      bool stop_after_first) {
    if (path_idx > ctx.p.l()) {
        total += 1;
        return;
    }
    const TriCell corner = ctx.corner[path_idx - 1];
    const long long nv = ctx.labeled[path_idx - 1], nl = ctx.lefts[path_idx - 1];
    std::vector<Lozenge> lozs;

    auto dfs = [&](auto&& self, int r, int c, long long vleft, long long lleft) -> void {
        if (stop_after_first && total > 0) return;
        if (vleft == 0 && lleft == 0) {
            if (ctx.cells.count(TriCell{r, c, true})) return;
            count_paths_cor1(ctx, path_idx + 1, used, total, stop_after_first);
            return;
        }
        const TriCell u{r, c, true};
        if (!ctx.cells.count(u) || used.count(u)) return;
        for (int left = 1; left >= 0; --left) {
            if (left ? lleft == 0 : vleft == 0) continue;
            const TriCell d = left ? TriCell{r, c - 1, false} : TriCell{r + 1, c - 1, false};
            if (!ctx.cells.count(d) || used.count(d)) continue;
            used.insert(u);
            used.insert(d);
            if (left) self(self, r, c - 1, vleft, lleft - 1);
            else self(self, r + 1, c - 1, vleft - 1, lleft);
            used.erase(u);
            used.erase(d);
        }
    };
    if (nv == 0 && nl == 0) {
        if (!ctx.cells.count(corner))
            count_paths_cor1(ctx, path_idx + 1, used, total, stop_after_first);
        return;
    }
    dfs(dfs, corner.row, corner.col, nv, nl);
}

// ---- second correspondence ------------------------------------------------

struct Cor2Ctx {
    TiltedParams p;
    Region region;
    CellSet cells;
    std::vector<long long> b;        // dent levels, ascending
    std::vector<TriCell> entry;      // entry[j-1]: first down cell below dent b_j
    std::vector<long long> depth;    // steps until the path leaves the region
    std::vector<long long> nleft;    // left lozenges on path j: b_j - j
};

Cor2Ctx make_cor2(long long k, long long h, long long l, const std::vector<long long>& a) {
    if ((long long)a.size() != l) throw InvalidParams("l must equal the length of a");
    Cor2Ctx ctx;
    ctx.p = TiltedParams::make(k, 0, 0, h, a);
    ctx.region = build_tilted_region(ctx.p);
    ctx.cells = CellSet(ctx.region.begin(), ctx.region.end());
    const long long n = h + l;
    std::set<long long> keep(a.begin(), a.end());
    for (long long j = 1; j <= n; ++j)
        if (!keep.count(j)) ctx.b.push_back(j);
    const long long consumed = n > 0 ? h * (k + 1) + (l - 1) * k + l : 0;
    auto corners = staircase_corners(ctx.p);
    for (long long j = 1; j <= h; ++j) {
        const TriCell c = corners.at(ctx.b[j - 1]);
        ctx.entry.push_back(TriCell{c.row + 1, c.col - 1, false});
        ctx.depth.push_back(consumed - 1 - c.row);
        ctx.nleft.push_back(ctx.b[j - 1] - j);
    }
    return ctx;
}

std::vector<long long> expected_shape_cor2(const Cor2Ctx& ctx) {
    std::vector<long long> shape;
    const long long h = ctx.p.h;
    for (long long j = 1; j <= h; ++j) shape.push_back(ctx.nleft[h - j]);
    return shape;
}

// Path j from its entry down cell: 'R' shifts the next row left, 'L' keeps
// the column; label of each left lozenge = right lozenges before it.
bool build_path_cor2(const Cor2Ctx& ctx, long long j, const std::vector<long long>& labels,
                     CellSet& used, std::vector<Lozenge>* out) {
    const long long m = ctx.nleft[j - 1], depth = ctx.depth[j - 1];
    if ((long long)labels.size() != m) return false;
    long long prev = 0;
    for (long long y : labels) {
        if (y < prev || y > depth - m) return false;
        prev = y;
    }
    int r = ctx.entry[j - 1].row, c = ctx.entry[j - 1].col;
    std::vector<Lozenge> lozs;
    auto step = [&](bool left) {
        const TriCell d{r, c, false};
        const TriCell u = left ? TriCell{r, c + 1, true} : TriCell{r, c, true};
        if (!ctx.cells.count(d) || !ctx.cells.count(u) || used.count(d) || used.count(u))
            return false;
        lozs.push_back(make_lozenge(u, d));
        ++r;
        if (!left) --c;
        return true;
    };
    prev = 0;
    for (long long y : labels) {
        for (long long q = prev; q < y; ++q)
            if (!step(false)) return false;
        if (!step(true)) return false;
        prev = y;
    }
    for (long long q = prev; q < depth - m; ++q)
        if (!step(false)) return false;
    if (ctx.cells.count(TriCell{r, c, false})) return false;
    for (const Lozenge& lz : lozs) {
        used.insert(lz.u);
        used.insert(lz.d);
    }
    if (out) out->insert(out->end(), lozs.begin(), lozs.end());
    return true;
}

void count_paths_cor2(const Cor2Ctx& ctx, long long j, CellSet& used, BigInt& total) {
    if (j > ctx.p.h) {
        total += 1;
        return;
    }
    const long long m = ctx.nleft[j - 1], depth = ctx.depth[j - 1];
    if (depth < m) return;
    auto dfs = [&](auto&& self, int r, int c, long long rleft, long long lleft) -> void {
        if (rleft == 0 && lleft == 0) {
            if (ctx.cells.count(TriCell{r, c, false})) return;
            count_paths_cor2(ctx, j + 1, used, total);
            return;
        }
        const TriCell d{r, c, false};
        if (!ctx.cells.count(d) || used.count(d)) return;
        for (int left = 0; left <= 1; ++left) {
            if (left ? lleft == 0 : rleft == 0) continue;
            const TriCell u = left ? TriCell{r, c + 1, true} : TriCell{r, c, true};
            if (!ctx.cells.count(u) || used.count(u)) continue;
            used.insert(d);
            used.insert(u);
            if (left) self(self, r + 1, c, rleft, lleft - 1);
            else self(self, r + 1, c - 1, rleft - 1, lleft);
            used.erase(d);
            used.erase(u);
        }
    };
    if (depth == 0) {
        if (!ctx.cells.count(ctx.entry[j - 1])) count_paths_cor2(ctx, j + 1, used, total);
        return;
    }
    dfs(dfs, ctx.entry[j - 1].row, ctx.entry[j - 1].col, depth - m, m);
}

std::vector<long long> decreasing(std::vector<long long> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

}  // namespace

nlohmann::json pp_to_json(const PlanePartition& pp) {
    return nlohmann::json{{"shape", pp.shape}, {"rows", pp.rows}};
}

PlanePartition pp_from_json(const nlohmann::json& j) {
    PlanePartition pp;
    pp.shape = j.at("shape").get<std::vector<long long>>();
    pp.rows = j.at("rows").get<std::vector<std::vector<long long>>>();
    return pp;
}

PlanePartition tiling_to_pp_cor1(const TiltedParams& p, const Tiling& t) {
    const Cor1Ctx ctx = make_cor1(p);
    validate_tiling(ctx.region, t);
    auto paths = extract_paths(ctx.cells, t, Orient::Right);

    std::vector<std::vector<long long>> by_path(p.l());
    for (long long i = 1; i <= p.l(); ++i) {
        const TriCell corner = ctx.corner[i - 1];
        if (!ctx.cells.count(corner)) continue;  // degenerate: empty path
        auto* path = path_from(paths, corner);
        if (!path) throw InvalidTiling("no lozenge path at a staircase corner");
        long long nl = 0;
        for (const Lozenge& lz : *path) {
            if (lz.orient == Orient::Left) ++nl;
            else by_path[i - 1].push_back(i + nl);
        }
    }
    PlanePartition pp;
    pp.shape = expected_shape_cor1(ctx);
    for (long long j = 1; j <= p.l(); ++j) {
        auto row = decreasing(by_path[p.l() - j]);
        if ((long long)row.size() != pp.shape[j - 1])
            throw InvalidTiling("path label count disagrees with the shape");
        pp.rows.push_back(std::move(row));
    }
    return pp;
}

Tiling pp_to_tiling_cor1(const TiltedParams& p, const PlanePartition& pp) {
    const Cor1Ctx ctx = make_cor1(p);
    if (pp.shape != expected_shape_cor1(ctx) || pp.rows.size() != pp.shape.size())
        throw InvalidPartition("shape mismatch");

    CellSet used;
    Tiling out;
    for (long long i = 1; i <= p.l(); ++i) {
        std::vector<long long> labels = pp.rows[p.l() - i];
        std::reverse(labels.begin(), labels.end());  // weakly increasing along the path
        if ((long long)labels.size() != ctx.labeled[i - 1])
            throw InvalidPartition("row length disagrees with the shape");
        long long prev = i;
        for (long long y : labels) {
            if (y < prev || y > i + ctx.lefts[i - 1])
                throw InvalidPartition("label outside the path's range");
            prev = y;
        }
        if (!build_path_cor1(ctx, i, labels, used, &out))
            throw InvalidPartition("label sequence has no disjoint in-region path");
    }
    for (const TriCell& c : ctx.region) {
        if (!c.up || used.count(c)) continue;
        const TriCell d{c.row, c.col, false};
        if (!ctx.cells.count(d) || used.count(d))
            throw InvalidPartition("leftover cells admit no right-lozenge filling");
        used.insert(c);
        used.insert(d);
        out.push_back(make_lozenge(c, d));
    }
    return sorted_tiling(std::move(out));
}

BigInt enumerate_pp_cor1(const TiltedParams& p) {
    const Cor1Ctx ctx = make_cor1(p);
    CellSet used;
    BigInt total = 0;
    count_paths_cor1(ctx, 1, used, total, false);
    return total;
}

bool cor1_first_path_feasible(const TiltedParams& p, const std::vector<long long>& labels) {
    const Cor1Ctx ctx = make_cor1(p);
    if (p.l() == 0) return labels.empty();
    if ((long long)labels.size() != ctx.labeled[0]) return false;
    CellSet used;
    if (!build_path_cor1(ctx, 1, labels, used, nullptr)) return false;
    BigInt rest = 0;
    count_paths_cor1(ctx, 2, used, rest, true);
    return rest > 0;
}

PlanePartition tiling_to_pp_cor2(long long h, long long l, long long k,
                                 const std::vector<long long>& a, const Tiling& t) {
    const Cor2Ctx ctx = make_cor2(k, h, l, a);
    validate_tiling(ctx.region, t);
    auto paths = extract_paths(ctx.cells, t, Orient::Vertical);

    std::vector<std::vector<long long>> by_path(h);
    for (long long j = 1; j <= h; ++j) {
        const TriCell entry = ctx.entry[j - 1];
        if (!ctx.cells.count(entry)) continue;
        auto* path = path_from(paths, entry);
        if (!path) throw InvalidTiling("no lozenge path at a dent");
        long long nr = 0;
        for (const Lozenge& lz : *path) {
            if (lz.orient == Orient::Right) ++nr;
            else by_path[j - 1].push_back(nr);
        }
    }
    PlanePartition pp;
    pp.shape = expected_shape_cor2(ctx);
    for (long long jj = 1; jj <= h; ++jj) {
        auto row = decreasing(by_path[h - jj]);
        if ((long long)row.size() != pp.shape[jj - 1])
            throw InvalidTiling("path label count disagrees with the shape");
        pp.rows.push_back(std::move(row));
    }
    return pp;
}

Tiling pp_to_tiling_cor2(long long k, long long h, long long l,
                         const std::vector<long long>& a, const PlanePartition& pp) {
    const Cor2Ctx ctx = make_cor2(k, h, l, a);
    if (pp.shape != expected_shape_cor2(ctx) || pp.rows.size() != pp.shape.size())
        throw InvalidPartition("shape mismatch");

    CellSet used;
    Tiling out;
    for (long long j = 1; j <= h; ++j) {
        std::vector<long long> labels = pp.rows[h - j];
        std::reverse(labels.begin(), labels.end());
        if (!build_path_cor2(ctx, j, labels, used, &out))
            throw InvalidPartition("label sequence has no disjoint in-region path");
    }
    for (const TriCell& c : ctx.region) {
        if (!c.up || used.count(c)) continue;
        const TriCell d{c.row + 1, c.col - 1, false};
        if (!ctx.cells.count(d) || used.count(d))
            throw InvalidPartition("leftover cells admit no vertical-lozenge filling");
        used.insert(c);
        used.insert(d);
        out.push_back(make_lozenge(c, d));
    }
    return sorted_tiling(std::move(out));
}

BigInt enumerate_pp_cor2(long long k, long long h, long long l,
                         const std::vector<long long>& a) {
    const Cor2Ctx ctx = make_cor2(k, h, l, a);
    CellSet used;
    BigInt total = 0;
    count_paths_cor2(ctx, 1, used, total);
    return total;
}

BigInt enumerate_pp_cor2_literal(long long k, long long h, long long l,
                                 const std::vector<long long>& a) {
    const Cor2Ctx ctx = make_cor2(k, h, l, a);
    const auto shape = expected_shape_cor2(ctx);
    const long long cap = h + k * (h + l);

    std::vector<std::vector<long long>> rows(h);
    BigInt total = 0;
    auto rec = [&](auto&& self, long long i) -> void {
        if (i == h) {
            total += 1;
            return;
        }
        const long long len = shape[i];
        const long long gap = (i + 1 < h ? shape[i] - shape[i + 1] : shape[i]) * k;
        rows[i].assign(len, 0);
        auto fill = [&](auto&& go, long long pos) -> void {
            if (pos == len) {
                self(self, i + 1);
                return;
            }
            // part bounds: row cap / left neighbor minus the in-row gap
            // condition, column above, and the j-th-from-right floor.
            long long hi = cap;
            if (pos > 0) hi = std::min(hi, rows[i][pos - 1] - gap);
            if (i > 0 && pos < shape[i - 1]) hi = std::min(hi, rows[i - 1][pos]);
            const long long lo = k * (len - pos);
            for (long long v = lo; v <= hi; ++v) {
                rows[i][pos] = v;
                go(go, pos + 1);
            }
        };
        fill(fill, 0);
    };
    rec(rec, 0);
    return total;
}

}  // namespace tilt
