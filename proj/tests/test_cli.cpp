#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tilt/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(std::vector<std::string> args) {
    std::vector<const char*> argv{"tilted"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream captured;
    auto* old = std::cout.rdbuf(captured.rdbuf());
    int code = tilt::run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    return json::parse(f);
}

std::string strip_runtime(std::string s) {
    // runtime fields are the only non-deterministic part of the output
    std::istringstream in(s);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.find("runtime_ms") == std::string::npos) out << line << "\n";
    return out.str();
}

}  // namespace

TEST_CASE("count: formula and oracle agree") {
    auto res = run({"count", "--family", "hexagon", "--a", "2", "--b", "2", "--c", "2",
                    "--method", "both"});
    CHECK(res.code == tilt::kExitOk);
    json j = json::parse(res.out);
    CHECK(j["count"] == "20");
    CHECK(j["oracle_count"] == "20");
    CHECK(j["agrees"] == true);
}

TEST_CASE("count: tilted with dents") {
    auto res = run({"count", "--family", "tilted", "--k", "1", "--x", "1", "--t", "1",
                    "--h", "0", "--dents", "1", "--method", "both"});
    CHECK(res.code == tilt::kExitOk);
    json j = json::parse(res.out);
    CHECK(j["count"] == "2");
    CHECK(j["agrees"] == true);
}

TEST_CASE("count: counts are decimal strings") {
    auto res = run({"count", "--family", "hexagon", "--a", "8", "--b", "8", "--c", "8",
                    "--method", "formula"});
    CHECK(res.code == tilt::kExitOk);
    json j = json::parse(res.out);
    CHECK(j["count"].is_string());
    // value needs more than 64 bits, which is the reason for strings
    CHECK(j["count"].get<std::string>().size() > 20);
}

TEST_CASE("count: invalid parameters exit 2") {
    CHECK(run({"count", "--family", "tilted", "--k", "1", "--x", "1", "--t", "1", "--h",
               "0", "--dents", "2,1"})
              .code == tilt::kExitInvalid);
    CHECK(run({"count", "--family", "nosuch"}).code == tilt::kExitInvalid);
    CHECK(run({"count", "--family", "hexagon", "--a", "-3"}).code == tilt::kExitInvalid);
    CHECK(run({"nosuchcommand"}).code == tilt::kExitInvalid);
    CHECK(run({}).code == tilt::kExitInvalid);
}

TEST_CASE("count: oracle on a too-wide region exits 4") {
    auto res = run({"count", "--family", "hexagon", "--a", "25", "--b", "2", "--c", "0",
                    "--method", "oracle"});
    CHECK(res.code == tilt::kExitResource);
}

TEST_CASE("count: deterministic output modulo runtime fields") {
    std::vector<std::string> args{"count", "--family", "tilted", "--k", "2", "--x", "2",
                                  "--t", "1", "--h", "1", "--dents", "1,3",
                                  "--method", "both"};
    auto r1 = run(args);
    auto r2 = run(args);
    CHECK(r1.code == tilt::kExitOk);
    CHECK(strip_runtime(r1.out) == strip_runtime(r2.out));
}

TEST_CASE("verify: default grid passes") {
    std::string path = temp_path("tilt_verify_default.json");
    auto res = run({"verify", "--check", "counts", "--out", path});
    CHECK(res.code == tilt::kExitOk);
    json j = read_json(path);
    CHECK(j["summary"]["mismatches"] == 0);
    CHECK(j["summary"]["total"].get<long long>() > 0);
    CHECK(j["points"].is_array());
    std::remove(path.c_str());
}

TEST_CASE("verify: resource guard exits 4") {
    auto res = run({"verify", "--max-x", "25", "--max-hl", "0", "--check", "counts"});
    CHECK(res.code == tilt::kExitResource);
    json j = json::parse(res.out);
    CHECK(j["error"] == "resource_guard");
    CHECK(j["limit"] == 20);
}

TEST_CASE("verify: kuo and bijection checks on a tiny grid") {
    for (std::string check : {"kuo", "bijections", "all"}) {
        auto res = run({"verify", "--max-k", "1", "--max-x", "1", "--max-t", "1",
                        "--max-hl", "2", "--check", check});
        CHECK(res.code == tilt::kExitOk);
    }
    CHECK(run({"verify", "--check", "nosuch"}).code == tilt::kExitInvalid);
}

TEST_CASE("render: svg with cells, dents and lozenges") {
    std::string path = temp_path("tilt_render.svg");
    auto res = run({"render", "--family", "tilted", "--k", "2", "--x", "2", "--t", "1",
                    "--h", "1", "--dents", "1", "--out", path});
    CHECK(res.code == tilt::kExitOk);
    std::ifstream f(path);
    std::string svg((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("#000000") != std::string::npos);  // one dent triangle
    std::remove(path.c_str());

    auto tiled = run({"render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1",
                      "--tiling-index", "0"});
    CHECK(tiled.code == tilt::kExitOk);
    // 3 lozenges, one of each class
    CHECK(tiled.out.find("#e4b363") != std::string::npos);
    CHECK(tiled.out.find("#6d9dc5") != std::string::npos);
    CHECK(tiled.out.find("#b5d99c") != std::string::npos);
}

TEST_CASE("render: tiling index out of range exits 5") {
    auto res = run({"render", "--family", "hexagon", "--a", "1", "--b", "1", "--c", "1",
                    "--tiling-index", "5"});
    CHECK(res.code == tilt::kExitIndex);
}

TEST_CASE("bijection: first correspondence round trip") {
    auto res = run({"bijection", "--cor", "1", "--k", "1", "--x",
                    "1", "--t", "1", "--h", "0", "--dents", "1", "--index", "0"});
    CHECK(res.code == tilt::kExitOk);
    json j = json::parse(res.out);
    CHECK(j["roundtrip"] == true);
    CHECK(j["plane_partition"]["shape"].size() == 1);
    CHECK(j["tiling"].is_array());
}

TEST_CASE("bijection: second correspondence round trip") {
    auto res = run({"bijection", "--cor", "2", "--k", "2", "--x",
                    "0", "--t", "0", "--h", "2", "--dents", "2,3", "--index", "3"});
    CHECK(res.code == tilt::kExitOk);
    json j = json::parse(res.out);
    CHECK(j["roundtrip"] == true);
    CHECK(j["plane_partition"]["shape"].size() == 2);
}

TEST_CASE("bijection: second correspondence needs x = t = 0") {
    auto res = run({"bijection", "--cor", "2", "--k", "1", "--x",
                    "1", "--t", "0", "--h", "1", "--dents", "1", "--index", "0"});
    CHECK(res.code == tilt::kExitInvalid);
}

TEST_CASE("bijection: index out of range exits 5") {
    auto res = run({"bijection", "--cor", "1", "--k", "1", "--x",
                    "1", "--t", "1", "--h", "0", "--dents", "1", "--index", "99"});
    CHECK(res.code == tilt::kExitIndex);
}
