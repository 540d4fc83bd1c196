#include "tilt/lattice.hpp"

#include <algorithm>
#include <set>

namespace tilt {

namespace {

Region finish(std::vector<TriCell> cells) {
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

// Inclusive left-to-right span of cells between two cells of one row.
void append_row_span(std::vector<TriCell>& out, TriCell left, const TriCell& right) {
    if (right.key() < left.key()) return;
    TriCell cur = left;
    while (true) {
        out.push_back(cur);
        if (cur == right) break;
        cur = cur.up ? TriCell{cur.row, cur.col, false} : TriCell{cur.row, cur.col + 1, true};
    }
}

// Hexagon with north side a, upper-left side b, lower-left side c; b+c rows.
std::vector<std::vector<TriCell>> hexagon_rows(long long a, long long b, long long c) {
    std::vector<std::vector<TriCell>> rows;
    for (long long r = 0; r < b + c; ++r) {
        TriCell left = r < b ? TriCell{(int)r, (int)-r, true} : TriCell{(int)r, (int)-b, false};
        TriCell right = r < c ? TriCell{(int)r, (int)a, true}
                              : TriCell{(int)r, (int)(a - (r - c) - 1), false};
        std::vector<TriCell> row;
        append_row_span(row, left, right);
        rows.push_back(std::move(row));
    }
    return rows;
}

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

using Pt = std::pair<long long, long long>;

// Cell centroids in tripled axial coordinates: the 12 lattice symmetries act
// linearly and translations act by multiples of 3.
Pt centroid(const TriCell& c) {
    if (c.up) return {3LL * c.col - 1, 3LL * c.row + 2};
    return {3LL * c.col + 1, 3LL * c.row + 1};
}

Pt rot60(Pt p) { return {-p.second, p.first + p.second}; }
Pt mirror(Pt p) { return {-p.first - p.second, p.second}; }

std::vector<std::pair<int, int>> normalize(std::vector<Pt> pts) {
    long long qs = pts[0].first, rs = pts[0].second;
    for (const auto& [q, r] : pts) {
        qs = std::min(qs, q);
        rs = std::min(rs, r);
    }
    const long long dq = 3 * floordiv(qs + 2, 3);
    const long long dr = 3 * floordiv(rs + 2, 3);
    std::vector<std::pair<int, int>> out;
    out.reserve(pts.size());
    for (const auto& [q, r] : pts) out.emplace_back((int)(q - dq), (int)(r - dr));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::array<TriCell, 3> neighbors(const TriCell& c) {
    if (c.up)
        return {TriCell{c.row, c.col - 1, false},      // left
                TriCell{c.row, c.col, false},          // right
                TriCell{c.row + 1, c.col - 1, false}}; // below
    return {TriCell{c.row, c.col + 1, true},
            TriCell{c.row, c.col, true},
            TriCell{c.row - 1, c.col + 1, true}};
}

Lozenge make_lozenge(const TriCell& u, const TriCell& d) {
    if (!u.up || d.up) throw InvalidParams("lozenge needs one up and one down cell");
    Orient o;
    if (d.row == u.row && d.col == u.col) o = Orient::Right;
    else if (d.row == u.row && d.col == u.col - 1) o = Orient::Left;
    else if (d.row == u.row + 1 && d.col == u.col - 1) o = Orient::Vertical;
    else throw InvalidParams("lozenge cells are not adjacent");
    return Lozenge{u, d, o};
}

Region build_hexagon(const HexParams& p) {
    std::vector<TriCell> cells;
    for (auto& row : hexagon_rows(p.a, p.b, p.c))
        cells.insert(cells.end(), row.begin(), row.end());
    return finish(std::move(cells));
}

std::vector<TriCell> semihexagon_dents(const SemiHexParams& p) {
    std::vector<TriCell> dents;
    for (long long pos : p.s) dents.push_back(TriCell{(int)(p.b - 1), (int)(pos - p.b), true});
    return dents;
}

Region build_semihexagon(const SemiHexParams& p) {
    std::vector<TriCell> cells;
    for (long long r = 0; r < p.b; ++r)
        append_row_span(cells, TriCell{(int)r, (int)-r, true}, TriCell{(int)r, (int)p.a, true});
    const auto dents = semihexagon_dents(p);
    std::erase_if(cells, [&](const TriCell& c) {
        return std::find(dents.begin(), dents.end(), c) != dents.end();
    });
    return finish(std::move(cells));
}

TiltedParams halved_as_tilted(const HalvedHexParams& p) {
    std::vector<long long> a(p.c);
    for (long long i = 0; i < p.c; ++i) a[i] = i + 1;
    return TiltedParams::make(1, p.a, p.b - p.c + 1, 0, std::move(a));
}

Region build_halved_hexagon(const HalvedHexParams& p) {
    return build_tilted_region(halved_as_tilted(p));
}

std::map<long long, TriCell> staircase_corners(const TiltedParams& p) {
    std::map<long long, TriCell> out;
    const long long n = p.h + p.l();
    long long s = p.x, r = 0;
    for (long long j = n; j >= 1; --j) {
        out[j] = TriCell{(int)r, (int)s, true};
        const long long run = (j == 1) ? p.t : p.k;
        r += run + 1;
        s -= run;
    }
    return out;
}

std::vector<TriCell> tilted_dents(const TiltedParams& p) {
    std::vector<TriCell> dents;
    std::set<long long> keep(p.a.begin(), p.a.end());
    for (const auto& [level, cell] : staircase_corners(p))
        if (!keep.count(level)) dents.push_back(cell);
    std::sort(dents.begin(), dents.end());
    return dents;
}

Region build_tilted_region(const TiltedParams& p) {
    const long long l = p.l();
    const long long n = p.h + l;
    if (n == 0) {
        std::vector<TriCell> cells;
        for (auto& row : hexagon_rows(p.x, std::max<long long>(p.t - p.k, 0), 0))
            cells.insert(cells.end(), row.begin(), row.end());
        return finish(std::move(cells));
    }
    const long long B = p.h * (p.k + 1) + (l - 1) * p.k + p.t;
    const long long consumed = B + l;  // rows kept; the rest is cut away

    // Rightmost kept cell per row: the staircase corner on corner rows, the
    // down-triangle left of the descending edge elsewhere.
    std::vector<TriCell> limit(consumed, TriCell{});
    {
        long long s = p.x, r = 0;
        for (long long j = n; j >= 1; --j) {
            limit[r] = TriCell{(int)r, (int)s, true};
            const long long run = (j == 1) ? p.t : p.k;
            ++r;
            for (long long q = 0; q < run; ++q) {
                limit[r] = TriCell{(int)r, (int)(s - 1), false};
                --s;
                ++r;
            }
        }
    }

    const auto dents = tilted_dents(p);
    const auto rows = hexagon_rows(p.x, B, n);
    std::vector<TriCell> cells;
    for (long long rr = 0; rr < consumed && rr < (long long)rows.size(); ++rr) {
        for (const TriCell& c : rows[rr]) {
            if (c.key() > limit[rr].key()) continue;
            if (std::find(dents.begin(), dents.end(), c) != dents.end()) continue;
            cells.push_back(c);
        }
    }
    return finish(std::move(cells));
}

std::pair<Region, long long> remove_forced(const Region& r) {
    std::set<TriCell> cells(r.begin(), r.end());
    long long removed = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = cells.begin(); it != cells.end();) {
            const TriCell c = *it;
            TriCell only{};
            int deg = 0;
            for (const TriCell& nb : neighbors(c))
                if (cells.count(nb)) {
                    only = nb;
                    ++deg;
                }
            if (deg == 0) throw Untileable("cell with no partner left");
            if (deg == 1) {
                cells.erase(c);
                cells.erase(only);
                ++removed;
                changed = true;
                it = cells.begin();  // neighbor degrees shifted; rescan
            } else {
                ++it;
            }
        }
    }
    return {Region(cells.begin(), cells.end()), removed};
}

MatchGraph dual_graph(const Region& r) {
    MatchGraph g;
    g.cells = r;
    std::sort(g.cells.begin(), g.cells.end());
    std::map<TriCell, int> pos;
    for (int i = 0; i < (int)g.cells.size(); ++i) pos[g.cells[i]] = i;
    g.adj.resize(g.cells.size());
    for (int i = 0; i < (int)g.cells.size(); ++i) {
        const auto nbs = neighbors(g.cells[i]);
        for (int j = 0; j < 3; ++j) {
            auto it = pos.find(nbs[j]);
            g.adj[i][j] = it == pos.end() ? -1 : it->second;
        }
        if (g.cells[i].up) ++g.up_count;
        else ++g.down_count;
    }
    return g;
}

std::vector<std::pair<int, int>> canonical_form(const Region& r) {
    if (r.empty()) return {};
    std::vector<Pt> pts;
    pts.reserve(r.size());
    for (const TriCell& c : r) pts.push_back(centroid(c));

    std::vector<std::pair<int, int>> best;
    bool have = false;
    for (int m = 0; m < 2; ++m) {
        for (int rot = 0; rot < 6; ++rot) {
            std::vector<Pt> cur;
            cur.reserve(pts.size());
            for (Pt p : pts) {
                if (m) p = mirror(p);
                for (int q = 0; q < rot; ++q) p = rot60(p);
                cur.push_back(p);
            }
            auto cand = normalize(std::move(cur));
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return best;
}

bool congruent(const Region& r1, const Region& r2) {
    if (r1.size() != r2.size()) return false;
    return canonical_form(r1) == canonical_form(r2);
}

long long max_row_width(const Region& r) {
    std::map<int, long long> widths;
    for (const TriCell& c : r) ++widths[c.row];
    long long w = 0;
    for (const auto& [row, n] : widths) w = std::max(w, n);
    return w;
}

nlohmann::json region_to_json(const Region& r) {
    nlohmann::json j = nlohmann::json::array();
    for (const TriCell& c : r) j.push_back({c.row, c.col, c.up ? "U" : "D"});
    return j;
}

Region region_from_json(const nlohmann::json& j) {
    std::vector<TriCell> cells;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw InvalidParams("cell must be [row, col, \"U\"|\"D\"]");
        const std::string o = e[2].get<std::string>();
        if (o != "U" && o != "D") throw InvalidParams("cell orientation must be \"U\" or \"D\"");
        cells.push_back(TriCell{e[0].get<int>(), e[1].get<int>(), o == "U"});
    }
    return finish(std::move(cells));
}

}  // namespace tilt
