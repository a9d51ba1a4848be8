#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "tilekit/fixtures.hpp"

using namespace tilekit;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string bin() {
    const char* b = std::getenv("TILEKIT_BIN");
    return b ? b : "tilekit";
}

std::string data(const std::string& rel) { return (fs::path(TILEKIT_DATA_DIR) / rel).string(); }

Run run(const std::string& args) {
    Run r;
    std::string cmd = bin() + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

}  // namespace

TEST_CASE("fixture registry") {
    CHECK(fixture_list().size() == 12);
    for (const auto& f : fixture_list()) {
        CAPTURE(f.name);
        CHECK(validate_fixture(f.name));
        CHECK_FALSE(f.source.empty());
        auto shipped = fs::path(TILEKIT_DATA_DIR) / "fixtures" / (f.name + ".json");
        std::ifstream in(shipped);
        REQUIRE(in);
        CHECK(nlohmann::json::parse(in) == fixture_payload(f.name));
    }
    CHECK_THROWS(find_fixture("fig99"));

    auto four = fixture_payload("fig11-four-coloring");
    four["colors"][0] = four["colors"][1];
    CHECK_FALSE(validate_fixture_payload("fig11-four-coloring", four));
    auto box = fixture_payload("fig19-chvatal-witness");
    box["box"][0][0] = 3;
    CHECK_FALSE(validate_fixture_payload("fig19-chvatal-witness", box));
    auto tiles = fixture_payload("fig29-torus-tiling");
    tiles["placements"].erase(0);
    CHECK_FALSE(validate_fixture_payload("fig29-torus-tiling", tiles));
    CHECK_FALSE(validate_fixture_payload("fig13-k3-weighting", nlohmann::json{{"graph", 3}}));
    auto mono = fixture_payload("fig25-mono-coloring");
    mono["bound"] = 1;
    CHECK_FALSE(validate_fixture_payload("fig25-mono-coloring", mono));
}

TEST_CASE("documented exit codes") {
    CHECK(run("solve color --gamma 1 2 3 -k 3").code == 1);
    CHECK(run("onedim decide " + data("presets/proper3.json")).code == 0);
    CHECK(run("verify fixture fig11-four-coloring").code == 0);
    CHECK(run("solve color --gamma 1 2 3 -k 4").code == 0);
    CHECK(run("onedim decide proper2").code == 1);
    CHECK(run("solve hom --gamma 1 2 3 --target K4").code == 0);
    CHECK(run("solve hom --gamma 1 2 3 --target petersen").code == 1);
    CHECK(run("solve match --torus 5 5 5").code == 1);
    CHECK(run("solve edge-color --torus 4 4 -k 4").code == 0);
    CHECK(run("solve mono --gamma 1 5 2").code == 0);
    CHECK(run("--budget 10 solve color --gamma 1 2 3 -k 3").code == 2);
    CHECK(run("tile obstruct 5 5 --tiles 2x2").code == 0);
    CHECK(run("tile torus 5 5 --tiles 2x2").code == 1);
    CHECK(run("tile decide 13 13").code == 0);
    CHECK(run("hyper check --s 5").code == 0);
    CHECK(run("homotopy negweight klein --p 5").code == 1);
    CHECK(run("homotopy search-witness chvatal").code == 0);
}

TEST_CASE("errors exit with 2") {
    auto missing = run("solve color --gamma 1 2 3");
    CHECK(missing.code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("verify fixture fig99").code == 2);
    CHECK(run("solve color --gamma 1 1 3 -k 3").code == 2);
    CHECK(run("onedim decide no-such-preset").code == 2);
    CHECK(run("--seedless tiler12 fill --random 1 2 3 --seed 1").code == 2);
}

TEST_CASE("certificates round trip through the command line") {
    auto dir = fs::temp_directory_path() / "tilekit_cli_cert";
    fs::create_directories(dir);
    auto cert = (dir / "c.json").string();
    auto a = run("--json solve color --gamma 1 2 3 -k 3");
    auto b = run("--json solve color --gamma 1 2 3 -k 3");
    CHECK(a.out == b.out);
    std::ofstream(cert) << a.out;
    CHECK(run("verify certificate " + cert + " --gamma 1 2 3 -k 3").code == 0);
    CHECK(run("verify certificate " + cert + " --gamma 1 2 3 -k 4").code == 2);
    auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("verdict") == "UNSAT");
    CHECK(j.dump().find("time") == std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("tiler12 fill and validate") {
    auto dir = fs::temp_directory_path() / "tilekit_cli_t12";
    fs::create_directories(dir);
    auto spec = data("presets/tiler12-123.json");
    auto fill = run("--json tiler12 fill " + spec);
    REQUIRE(fill.code == 0);
    auto out = (dir / "t.json").string();
    std::ofstream(out) << fill.out;
    CHECK(run("tiler12 validate " + out + " --spec " + spec).code == 0);

    auto j = nlohmann::json::parse(fill.out);
    j["placements"].erase(0);
    std::ofstream(out) << j.dump();
    auto bad = run("tiler12 validate " + out);
    CHECK(bad.code == 1);
    CHECK(has(bad, "uncovered"));

    // Adjacent marks on top and bottom, 3 cells apart.
    auto close = (dir / "close.json").string();
    std::ofstream(close) << R"({"n":1,"p":2,"q":3,"top":"ccccccccddccccccccc","bottom":"ccccccccddccccccccc",)"
                         << R"("left":"aaaaaaaaaaaaaaaa","right":"aaaaaaaaaaaaaaaa","separation":0})";
    auto inf = run("tiler12 fill " + close);
    CHECK(inf.code == 2);
    CHECK(has(inf, "infeasible"));
    CHECK(run("tiler12 fill --random 2 5 7 --seed 3").code == 0);
    fs::remove_all(dir);
}

TEST_CASE("reproduce reports and filters") {
    auto sub = run("reproduce --fast --filter tiling");
    CHECK(sub.code == 0);
    CHECK(has(sub, "PASS 10"));
    CHECK(std::count(sub.out.begin(), sub.out.end(), '\n') == 1);
    auto js = run("--json reproduce --fast --filter hyper");
    CHECK(js.code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j.at("criteria").size() == 1);
    CHECK(j.at("passed") == true);

    auto dir = fs::temp_directory_path() / "tilekit_cli_fixtures";
    fs::remove_all(dir);
    fs::copy(data("fixtures"), dir);
    CHECK(run("reproduce --fast --filter mono --fixtures-dir " + dir.string()).code == 0);
    auto path = dir / "fig25-mono-coloring.json";
    auto payload = nlohmann::json::parse(std::ifstream(path));
    auto& colors = payload["colors"];
    for (auto& c : colors) c = 0;
    std::ofstream(path) << payload.dump();
    auto broken = run("reproduce --fast --filter mono --fixtures-dir " + dir.string());
    CHECK(broken.code == 1);
    CHECK(has(broken, "fig25-mono-coloring"));
    CHECK(run("verify fixture fig25-mono-coloring --file " + path.string()).code == 1);
    fs::remove_all(dir);
}
