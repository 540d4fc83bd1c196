#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tilt/lattice.hpp"

#include <algorithm>
#include <vector>

using namespace tilt;

static long long ups(const Region& r) {
    return std::count_if(r.begin(), r.end(), [](const TriCell& c) { return c.up; });
}
static long long downs(const Region& r) { return static_cast<long long>(r.size()) - ups(r); }

static std::vector<long long> complement_in(long long n, const std::vector<long long>& a) {
    std::vector<long long> out;
    for (long long v = 1; v <= n; ++v)
        if (!std::binary_search(a.begin(), a.end(), v)) out.push_back(v);
    return out;
}

static std::vector<std::vector<long long>> subsets_of(long long n) {
    std::vector<std::vector<long long>> out;
    for (long long m = 0; m < (1LL << n); ++m) {
        std::vector<long long> s;
        for (long long i = 1; i <= n; ++i)
            if (m & (1LL << (i - 1))) s.push_back(i);
        out.push_back(std::move(s));
    }
    return out;
}

TEST_CASE("cell ordering and keys") {
    TriCell u{0, 2, true}, d{0, 2, false};
    CHECK(u.key() == 4);
    CHECK(d.key() == 5);
    CHECK(u < d);
    CHECK(TriCell{1, -5, false} > d);
}

TEST_CASE("neighbors are mutual") {
    for (int r = -2; r <= 2; ++r)
        for (int c = -2; c <= 2; ++c)
            for (bool up : {true, false}) {
                TriCell cell{r, c, up};
                for (const TriCell& n : neighbors(cell)) {
                    auto back = neighbors(n);
                    CHECK(std::count(back.begin(), back.end(), cell) == 1);
                    CHECK(n.up != up);
                }
            }
}

TEST_CASE("make_lozenge derives the orientation") {
    TriCell u{0, 0, true};
    CHECK(make_lozenge(u, TriCell{0, 0, false}).orient == Orient::Right);
    CHECK(make_lozenge(u, TriCell{0, -1, false}).orient == Orient::Left);
    CHECK(make_lozenge(u, TriCell{1, -1, false}).orient == Orient::Vertical);
    CHECK_THROWS_AS(make_lozenge(u, TriCell{4, 4, false}), InvalidParams);
}

TEST_CASE("hexagon cell census") {
    CHECK(build_hexagon(HexParams::make(0, 0, 0)).empty());
    Region h111 = build_hexagon(HexParams::make(1, 1, 1));
    CHECK(h111.size() == 6);
    CHECK(ups(h111) == 3);
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b) {
            Region r = build_hexagon(HexParams::make(a, b, 0));
            CHECK(static_cast<long long>(r.size()) == 2 * a * b);
            CHECK(ups(r) == downs(r));
        }
    Region h222 = build_hexagon(HexParams::make(2, 2, 2));
    CHECK(h222.size() == 24);
    CHECK(ups(h222) == 12);
}

TEST_CASE("hexagon congruence under side rotation") {
    // rotating the side lengths rotates the region
    CHECK(congruent(build_hexagon(HexParams::make(1, 2, 3)),
                    build_hexagon(HexParams::make(2, 3, 1))));
    CHECK(congruent(build_hexagon(HexParams::make(1, 2, 1)),
                    build_hexagon(HexParams::make(2, 1, 1))));
    CHECK_FALSE(congruent(build_hexagon(HexParams::make(1, 1, 1)),
                          build_hexagon(HexParams::make(2, 2, 2))));
}

TEST_CASE("semihexagon census and balance") {
    // a+b upper row pairs minus b removed up-triangles keeps the region balanced
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (const auto& sraw : subsets_of(a + b)) {
                if (static_cast<long long>(sraw.size()) != b) continue;
                Region r = build_semihexagon(SemiHexParams::make(a, b, sraw));
                CHECK(ups(r) == downs(r));
                auto dents = semihexagon_dents(SemiHexParams::make(a, b, sraw));
                CHECK(static_cast<long long>(dents.size()) == b);
                for (const TriCell& d : dents) {
                    CHECK(d.up);
                    CHECK_FALSE(std::binary_search(r.begin(), r.end(), d));
                }
            }
}

TEST_CASE("tilted region census and balance") {
    for (long long k = 0; k <= 2; ++k)
        for (long long x = 0; x <= 2; ++x)
            for (long long t = 0; t <= 2; ++t)
                for (long long hl = 0; hl <= 4; ++hl)
                    for (const auto& a : subsets_of(hl)) {
                        long long h = hl - static_cast<long long>(a.size());
                        auto p = TiltedParams::make(k, x, t, h, a);
                        Region r = build_tilted_region(p);
                        CHECK(ups(r) == downs(r));
                        CHECK(std::is_sorted(r.begin(), r.end()));
                        CHECK(std::adjacent_find(r.begin(), r.end()) == r.end());
                        auto dents = tilted_dents(p);
                        CHECK(static_cast<long long>(dents.size()) == h);
                        for (const TriCell& d : dents)
                            CHECK_FALSE(std::binary_search(r.begin(), r.end(), d));
                    }
}

TEST_CASE("tilted region at k = 0, h = 0 is a hexagon") {
    for (long long x = 0; x <= 3; ++x)
        for (long long t = 0; t <= 3; ++t)
            for (long long l = 0; l <= 3; ++l) {
                std::vector<long long> a;
                for (long long i = 1; i <= l; ++i) a.push_back(i);
                CHECK(congruent(build_tilted_region(TiltedParams::make(0, x, t, 0, a)),
                                build_hexagon(HexParams::make(x, t, l))));
            }
}

TEST_CASE("tilted region at k = 0, x = 0, t = 0 is a dented semihexagon") {
    for (long long hl = 0; hl <= 5; ++hl)
        for (const auto& a : subsets_of(hl)) {
            long long h = hl - static_cast<long long>(a.size());
            long long l = static_cast<long long>(a.size());
            Region r1 = build_tilted_region(TiltedParams::make(0, 0, 0, h, a));
            Region r2 = build_semihexagon(SemiHexParams::make(l, h, complement_in(hl, a)));
            CHECK(congruent(r1, r2));
        }
}

TEST_CASE("halved hexagon builder matches its tilted-parameter view") {
    for (long long a = 0; a <= 3; ++a)
        for (long long b = 0; b <= 3; ++b)
            for (long long c = 0; c <= b; ++c) {
                auto p = HalvedHexParams::make(a, b, c);
                CHECK(build_halved_hexagon(p) == build_tilted_region(halved_as_tilted(p)));
            }
}

TEST_CASE("staircase corners") {
    auto p = TiltedParams::make(2, 3, 3, 2, {1, 3, 4, 6});
    auto corners = staircase_corners(p);
    CHECK(corners.size() == 6);  // one per level h+l .. 1
    CHECK(corners.begin()->first == 1);
    CHECK(corners.rbegin()->first == 6);
    // level h+l sits at the top right of the staircase
    CHECK(corners.at(6) == TriCell{0, 3, true});
    Region r = build_tilted_region(p);
    for (auto& [lvl, c] : corners) {
        bool in_region = std::binary_search(r.begin(), r.end(), c);
        bool is_dent = std::binary_search(p.a.begin(), p.a.end(), lvl);
        CHECK(in_region == is_dent);  // dent-free levels have their corner removed
    }
}

TEST_CASE("remove_forced") {
    // fully forced: dents at 1..b leave a single tiling, stripped to nothing
    Region full = build_semihexagon(SemiHexParams::make(0, 2, {1, 2}));
    auto [res0, n0] = remove_forced(full);
    CHECK(res0.empty());
    CHECK(2 * static_cast<size_t>(n0) == full.size());

    // nothing forced in a hexagon with every side >= 1
    auto [res1, n1] = remove_forced(build_hexagon(HexParams::make(1, 1, 1)));
    CHECK(n1 == 0);
    CHECK(res1 == build_hexagon(HexParams::make(1, 1, 1)));

    // a lone up-triangle has no partner
    CHECK_THROWS_AS(remove_forced(Region{TriCell{0, 0, true}}), Untileable);

    // cascade: pairing off the strip leaves one odd cell
    Region bad{TriCell{0, 0, true}, TriCell{0, 0, false}, TriCell{0, 1, true}};
    CHECK_THROWS_AS(remove_forced(bad), Untileable);

    CHECK(remove_forced(Region{}).first.empty());
}

TEST_CASE("dual graph structure") {
    auto g = dual_graph(build_hexagon(HexParams::make(1, 1, 1)));
    CHECK(g.cells.size() == 6);
    CHECK(g.up_count == 3);
    CHECK(g.down_count == 3);
    long long edges = 0;
    for (size_t i = 0; i < g.cells.size(); ++i)
        for (int b = 0; b < 3; ++b)
            if (g.adj[i][b] >= 0) {
                ++edges;
                // adjacency is symmetric
                int j = g.adj[i][b];
                bool back = false;
                for (int bb = 0; bb < 3; ++bb) back |= g.adj[j][bb] == static_cast<int>(i);
                CHECK(back);
            }
    CHECK(edges % 2 == 0);
    CHECK(edges / 2 == 6);  // the dual of the unit hexagon is a 6-cycle
    CHECK(dual_graph(Region{}).cells.empty());
}

TEST_CASE("congruence is translation and symmetry invariant") {
    Region r = build_tilted_region(TiltedParams::make(1, 2, 1, 1, {2}));
    Region shifted;
    for (TriCell c : r) shifted.push_back(TriCell{c.row + 3, c.col - 2, c.up});
    std::sort(shifted.begin(), shifted.end());
    CHECK(congruent(r, shifted));
    CHECK(canonical_form(r) == canonical_form(shifted));
    CHECK_FALSE(congruent(r, build_hexagon(HexParams::make(2, 2, 1))));
    CHECK(congruent(Region{}, Region{}));
}

TEST_CASE("max_row_width") {
    CHECK(max_row_width(Region{}) == 0);
    CHECK(max_row_width(build_hexagon(HexParams::make(1, 1, 1))) == 3);
    CHECK(max_row_width(build_hexagon(HexParams::make(5, 1, 0))) == 10);
}

TEST_CASE("region json round trip") {
    Region r = build_tilted_region(TiltedParams::make(2, 2, 1, 1, {1, 2}));
    nlohmann::json j = region_to_json(r);
    CHECK(j.is_array());
    CHECK(j.size() == r.size());
    CHECK(j[0].size() == 3);
    CHECK(region_from_json(j) == r);
    CHECK(region_from_json(region_to_json(Region{})).empty());
}
