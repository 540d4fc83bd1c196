#include "tilt/cli.hpp"

#include "tilt/bijection.hpp"
#include "tilt/closedform.hpp"
#include "tilt/exactnum.hpp"
#include "tilt/lattice.hpp"
#include "tilt/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

namespace tilt {

namespace {

using nlohmann::json;

constexpr long long kWidthGuard = 20;  // max cells per row the oracle will accept

long long now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

std::vector<long long> parse_dents(const std::string& s) {
    std::vector<long long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw InvalidParams("bad dent list: " + s);
    }
    return out;
}

json tilted_json(const TiltedParams& p) {
    return json{{"k", p.k}, {"x", p.x}, {"t", p.t}, {"h", p.h}, {"a", p.a}};
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw InvalidParams("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
}

// ---- family dispatch ------------------------------------------------------

struct FamilyInstance {
    std::string family;
    json params;
    Region region;
    std::vector<TriCell> dents;
    BigInt (*formula_of)(const FamilyInstance&) = nullptr;
    // stashed typed params
    std::optional<TiltedParams> tilted;
    std::optional<HexParams> hex;
    std::optional<SemiHexParams> semi;
    std::optional<HalvedHexParams> halved;

    BigInt formula() const { return formula_of(*this); }
};

struct FamilyArgs {
    std::string family;
    long long k = 0, x = 0, t = 0, h = 0;
    long long a = 0, b = 0, c = 0;
    std::string dents;
};

FamilyInstance make_instance(const FamilyArgs& fa) {
    FamilyInstance fi;
    fi.family = fa.family;
    if (fa.family == "tilted") {
        fi.tilted = TiltedParams::make(fa.k, fa.x, fa.t, fa.h, parse_dents(fa.dents));
        fi.params = tilted_json(*fi.tilted);
        fi.region = build_tilted_region(*fi.tilted);
        fi.dents = tilted_dents(*fi.tilted);
        fi.formula_of = [](const FamilyInstance& f) { return count_tilted(*f.tilted); };
    } else if (fa.family == "hexagon") {
        fi.hex = HexParams::make(fa.a, fa.b, fa.c);
        fi.params = json{{"a", fa.a}, {"b", fa.b}, {"c", fa.c}};
        fi.region = build_hexagon(*fi.hex);
        fi.formula_of = [](const FamilyInstance& f) { return count_hexagon(*f.hex); };
    } else if (fa.family == "semihex") {
        fi.semi = SemiHexParams::make(fa.a, fa.b, parse_dents(fa.dents));
        fi.params = json{{"a", fa.a}, {"b", fa.b}, {"s", fi.semi->s}};
        fi.region = build_semihexagon(*fi.semi);
        fi.dents = semihexagon_dents(*fi.semi);
        fi.formula_of = [](const FamilyInstance& f) { return count_semihexagon(*f.semi); };
    } else if (fa.family == "halved") {
        fi.halved = HalvedHexParams::make(fa.a, fa.b, fa.c);
        fi.params = json{{"a", fa.a}, {"b", fa.b}, {"c", fa.c}};
        fi.region = build_halved_hexagon(*fi.halved);
        fi.dents = tilted_dents(halved_as_tilted(*fi.halved));
        fi.formula_of = [](const FamilyInstance& f) { return count_halved_hexagon(*f.halved); };
    } else {
        throw InvalidParams("unknown family: " + fa.family);
    }
    return fi;
}

// ---- count ----------------------------------------------------------------

int cmd_count(const FamilyArgs& fa, const std::string& method, const std::string& out_path) {
    const FamilyInstance fi = make_instance(fa);
    const long long started = now_ms();
    json rec{{"family", fi.family}, {"params", fi.params}, {"method", method}};

    std::optional<BigInt> formula, oracle;
    if (method == "formula" || method == "both") formula = fi.formula();
    if (method == "oracle" || method == "both") {
        if (max_row_width(fi.region) > kWidthGuard) {
            std::cerr << "region exceeds the row-width guard (" << kWidthGuard << ")\n";
            return kExitResource;
        }
        oracle = count_region(fi.region);
    }
    rec["count"] = to_decimal(formula ? *formula : *oracle);
    if (method == "both") {
        rec["oracle_count"] = to_decimal(*oracle);
        rec["agrees"] = (*formula == *oracle);
    }
    rec["runtime_ms"] = now_ms() - started;
    emit(rec, out_path);
    if (method == "both" && *formula != *oracle) return kExitMismatch;
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyTask {
    TiltedParams p;
    std::string check;  // counts | kuo | cor1 | cor2
};

json run_task(const VerifyTask& task, bool& mismatch, bool& pole) {
    json rec{{"params", tilted_json(task.p)}, {"check", task.check}};
    const long long started = now_ms();
    try {
        if (task.check == "counts") {
            const BigInt f = count_tilted(task.p);
            const BigInt o = count_region(build_tilted_region(task.p));
            rec["closed_form"] = to_decimal(f);
            rec["oracle"] = to_decimal(o);
            rec["match"] = (f == o);
            mismatch = (f != o);
        } else if (task.check == "kuo") {
            const bool cf = check_kuo_region(task.p, KuoMethod::ClosedForm);
            const bool orc = check_kuo_region(task.p, KuoMethod::Oracle);
            rec["closed_form"] = cf ? "ok" : "fail";
            rec["oracle"] = orc ? "ok" : "fail";
            rec["match"] = cf && orc;
            mismatch = !(cf && orc);
        } else if (task.check == "cor1") {
            const BigInt f = count_tilted(task.p);
            const BigInt e = enumerate_pp_cor1(task.p);
            rec["closed_form"] = to_decimal(f);
            rec["oracle"] = to_decimal(e);
            rec["match"] = (f == e);
            mismatch = (f != e);
        } else {  // cor2
            const BigInt f = count_tilted(task.p);
            const BigInt e = enumerate_pp_cor2(task.p.k, task.p.h, task.p.l(), task.p.a);
            rec["closed_form"] = to_decimal(f);
            rec["oracle"] = to_decimal(e);
            rec["match"] = (f == e);
            mismatch = (f != e);
        }
    } catch (const PoleError& e) {
        rec["pole_error"] = e.what();
        rec["match"] = false;
        pole = true;
    }
    rec["runtime_ms"] = now_ms() - started;
    return rec;
}

void grid_params(long long max_k, long long max_x, long long max_t, long long max_hl,
                 const std::function<void(const TiltedParams&)>& f) {
    for (long long k = 0; k <= max_k; ++k)
        for (long long x = 0; x <= max_x; ++x)
            for (long long t = 0; t <= max_t; ++t)
                for (long long n = 0; n <= max_hl; ++n)
                    for (long long l = 0; l <= n; ++l) {
                        // all strictly increasing l-subsets of {1..n}
                        std::vector<long long> a(l);
                        for (long long i = 0; i < l; ++i) a[i] = i + 1;
                        while (true) {
                            f(TiltedParams::make(k, x, t, n - l, a));
                            long long i = l - 1;
                            while (i >= 0 && a[i] == n - (l - 1 - i)) --i;
                            if (i < 0) break;
                            ++a[i];
                            for (long long q = i + 1; q < l; ++q) a[q] = a[q - 1] + 1;
                        }
                    }
}

int worker_count() {
    if (const char* env = std::getenv("TILTED_VERIFY_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

int cmd_verify(long long max_k, long long max_x, long long max_t, long long max_hl,
               const std::string& check, const std::string& out_path) {
    std::vector<VerifyTask> tasks;
    bool guard_tripped = false;
    long long widest = 0;
    grid_params(max_k, max_x, max_t, max_hl, [&](const TiltedParams& p) {
        const long long w = max_row_width(build_tilted_region(p));
        widest = std::max(widest, w);
        if (w > kWidthGuard) guard_tripped = true;
        if (check == "counts" || check == "all") tasks.push_back({p, "counts"});
        if ((check == "kuo" || check == "all") && p.x >= 1 && p.t >= 1 && p.l() >= 1)
            tasks.push_back({p, "kuo"});
        if (check == "bijections" || check == "all") {
            if (p.h + p.l() <= 4) tasks.push_back({p, "cor1"});
            if (p.x == 0 && p.t == 0) tasks.push_back({p, "cor2"});
        }
    });
    if (guard_tripped) {
        emit(json{{"error", "resource_guard"},
                  {"max_row_width", widest},
                  {"limit", kWidthGuard}},
             out_path);
        return kExitResource;
    }

    std::vector<json> records(tasks.size());
    std::vector<char> mism(tasks.size(), 0), poles(tasks.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
            bool m = false, p = false;
            records[i] = run_task(tasks[i], m, p);
            mism[i] = m;
            poles[i] = p;
        }
    };
    const int nw = std::min<int>(worker_count(), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (int i = 1; i < nw; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    long long mismatches = 0, pole_errors = 0;
    json points = json::array();
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        points.push_back(records[i]);
        mismatches += mism[i];
        pole_errors += poles[i];
    }
    json report{{"grid", json{{"max_k", max_k},
                              {"max_x", max_x},
                              {"max_t", max_t},
                              {"max_hl", max_hl},
                              {"check", check}}},
                {"points", points},
                {"summary", json{{"total", (long long)tasks.size()},
                                 {"mismatches", mismatches},
                                 {"pole_errors", pole_errors}}}};
    emit(report, out_path);
    return mismatches == 0 ? kExitOk : kExitMismatch;
}

// ---- render ---------------------------------------------------------------

struct XY {
    double x, y;
};

XY vertex_xy(int s, int r, double scale) {
    return {(s + r * 0.5) * scale, r * scale * 0.8660254037844386};
}

std::vector<std::pair<int, int>> cell_vertices(const TriCell& c) {
    if (c.up) return {{c.col, c.row}, {c.col - 1, c.row + 1}, {c.col, c.row + 1}};
    return {{c.col, c.row}, {c.col + 1, c.row}, {c.col, c.row + 1}};
}

std::string svg_points(const std::vector<std::pair<int, int>>& verts, double scale,
                       double ox, double oy) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    bool first = true;
    for (const auto& [s, r] : verts) {
        const XY p = vertex_xy(s, r, scale);
        os << (first ? "" : " ") << p.x - ox << "," << p.y - oy;
        first = false;
    }
    return os.str();
}

// Quadrilateral outline of a lozenge: the 4 vertices of its two triangles,
// ordered by angle around their centroid.
std::vector<std::pair<int, int>> lozenge_vertices(const Lozenge& lz) {
    std::vector<std::pair<int, int>> vs;
    for (const auto& v : cell_vertices(lz.u)) vs.push_back(v);
    for (const auto& v : cell_vertices(lz.d))
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    double cx = 0, cy = 0;
    for (const auto& [s, r] : vs) {
        const XY p = vertex_xy(s, r, 1.0);
        cx += p.x;
        cy += p.y;
    }
    cx /= vs.size();
    cy /= vs.size();
    std::sort(vs.begin(), vs.end(), [&](const auto& a, const auto& b) {
        const XY pa = vertex_xy(a.first, a.second, 1.0), pb = vertex_xy(b.first, b.second, 1.0);
        return std::atan2(pa.y - cy, pa.x - cx) < std::atan2(pb.y - cy, pb.x - cx);
    });
    return vs;
}

int cmd_render(const FamilyArgs& fa, double scale, long long tiling_index, bool has_index,
               const std::string& out_path) {
    if (scale <= 0) throw InvalidParams("scale must be positive");
    const FamilyInstance fi = make_instance(fa);

    std::optional<Tiling> tiling;
    if (has_index) {
        if (tiling_index < 0) return kExitIndex;
        long long seen = 0;
        for_each_tiling(fi.region, [&](const Tiling& t) {
            if (seen++ == tiling_index) {
                tiling = t;
                return false;
            }
            return true;
        });
        if (!tiling) return kExitIndex;
    }

    double minx = 1e18, miny = 1e18, maxx = -1e18, maxy = -1e18;
    auto grow = [&](const TriCell& c) {
        for (const auto& [s, r] : cell_vertices(c)) {
            const XY p = vertex_xy(s, r, scale);
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    };
    for (const TriCell& c : fi.region) grow(c);
    for (const TriCell& c : fi.dents) grow(c);
    if (fi.region.empty() && fi.dents.empty()) minx = miny = maxx = maxy = 0;
    const double pad = scale * 0.5, ox = minx - pad, oy = miny - pad;

    std::ostringstream svg;
    svg.setf(std::ios::fixed);
    svg.precision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << maxx - minx + 2 * pad << "\" height=\"" << maxy - miny + 2 * pad << "\">\n";
    for (const TriCell& c : fi.region)
        svg << "  <polygon points=\"" << svg_points(cell_vertices(c), scale, ox, oy)
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    for (const TriCell& c : fi.dents)
        svg << "  <polygon points=\"" << svg_points(cell_vertices(c), scale, ox, oy)
            << "\" fill=\"#000000\" stroke=\"#000000\"/>\n";
    if (tiling) {
        for (const Lozenge& lz : *tiling) {
            const char* fill = lz.orient == Orient::Left     ? "#e4b363"
                               : lz.orient == Orient::Right  ? "#6d9dc5"
                                                             : "#b5d99c";
            svg << "  <polygon points=\"" << svg_points(lozenge_vertices(lz), scale, ox, oy)
                << "\" fill=\"" << fill << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
        }
    }
    svg << "</svg>\n";

    if (out_path.empty()) {
        std::cout << svg.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw InvalidParams("cannot open output file: " + out_path);
        f << svg.str();
    }
    return kExitOk;
}

// ---- bijection ------------------------------------------------------------

json tiling_json(const Tiling& t) {
    json out = json::array();
    for (const Lozenge& lz : t)
        out.push_back({{lz.u.row, lz.u.col, "U"}, {lz.d.row, lz.d.col, "D"}});
    return out;
}

int cmd_bijection(int corollary, const FamilyArgs& fa, long long index,
                  const std::string& out_path) {
    const TiltedParams p = TiltedParams::make(fa.k, fa.x, fa.t, fa.h, parse_dents(fa.dents));
    if (corollary == 2 && (p.x != 0 || p.t != 0)) {
        std::cerr << "the second correspondence needs x = 0 and t = 0\n";
        return kExitInvalid;
    }
    const Region region = build_tilted_region(p);

    std::optional<Tiling> tiling;
    if (index < 0) return kExitIndex;
    long long seen = 0;
    for_each_tiling(region, [&](const Tiling& t) {
        if (seen++ == index) {
            tiling = t;
            return false;
        }
        return true;
    });
    if (!tiling) return kExitIndex;

    Tiling sorted = *tiling;
    std::sort(sorted.begin(), sorted.end());

    PlanePartition pp;
    Tiling back;
    if (corollary == 1) {
        pp = tiling_to_pp_cor1(p, *tiling);
        back = pp_to_tiling_cor1(p, pp);
    } else {
        pp = tiling_to_pp_cor2(p.h, p.l(), p.k, p.a, *tiling);
        back = pp_to_tiling_cor2(p.k, p.h, p.l(), p.a, pp);
    }
    json rec{{"corollary", corollary},
             {"params", tilted_json(p)},
             {"index", index},
             {"tiling", tiling_json(sorted)},
             {"plane_partition", pp_to_json(pp)},
             {"shape", pp.shape},
             {"roundtrip", back == sorted}};
    emit(rec, out_path);
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"exact lozenge-tiling counts, oracles, and correspondences"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // keep -h free for the dent count

    FamilyArgs fa;
    std::string method = "formula", check = "all", out_path;
    long long max_k = 1, max_x = 2, max_t = 2, max_hl = 3;
    long long tiling_index = 0, index = 0;
    double scale = 24.0;
    int corollary = 1;

    auto add_family = [&](CLI::App* cmd, bool need_family) {
        cmd->set_help_flag("--help", "print help");
        if (need_family)
            cmd->add_option("--family", fa.family, "tilted | hexagon | semihex | halved")
                ->required();
        cmd->add_option("--k", fa.k);
        cmd->add_option("--x", fa.x);
        cmd->add_option("--t", fa.t);
        cmd->add_option("--h", fa.h);
        cmd->add_option("--a", fa.a);
        cmd->add_option("--b", fa.b);
        cmd->add_option("--c", fa.c);
        cmd->add_option("--dents", fa.dents, "comma-separated positions; empty for none");
    };

    auto* count = app.add_subcommand("count", "evaluate a counting formula and/or the oracle");
    add_family(count, true);
    count->add_option("--method", method)->check(CLI::IsMember({"formula", "oracle", "both"}));
    count->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "sweep a parameter grid and cross-check");
    verify->add_option("--max-k", max_k);
    verify->add_option("--max-x", max_x);
    verify->add_option("--max-t", max_t);
    verify->add_option("--max-hl", max_hl);
    verify->add_option("--check", check)
        ->check(CLI::IsMember({"counts", "kuo", "bijections", "all"}));
    verify->add_option("--out", out_path);

    auto* render = app.add_subcommand("render", "write an SVG figure of a region or tiling");
    add_family(render, true);
    auto* idx_opt = render->add_option("--tiling-index", tiling_index);
    render->add_option("--scale", scale);
    render->add_option("--out", out_path);

    auto* bij = app.add_subcommand("bijection", "map one tiling to its plane partition");
    bij->add_option("--cor", corollary)->check(CLI::IsMember({"1", "2"}));
    add_family(bij, false);
    bij->add_option("--index", index);
    bij->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (count->parsed()) return cmd_count(fa, method, out_path);
        if (verify->parsed()) return cmd_verify(max_k, max_x, max_t, max_hl, check, out_path);
        if (render->parsed())
            return cmd_render(fa, scale, tiling_index, idx_opt->count() > 0, out_path);
        if (bij->parsed()) return cmd_bijection(corollary, fa, index, out_path);
    } catch (const InvalidParams& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const LimitExceeded& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitOk;
}

}  // namespace tilt
