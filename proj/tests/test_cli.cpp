#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "twistcoh/cli.hpp"

using namespace twc;
using namespace fx;
using nlohmann::json;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
    json report() const { return json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli_main(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("hochschild dimension table") {
    Run r = run({"hochschild", "--twist", "nu", "--t", "2", "--max-degree", "4"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["schema_version"] == 1);
    CHECK(j["dims"] == json::array({2, 0, 1, 0, 1}));
    for (const char* method : {"bar", "builtin"}) {
        Run b = run({"hochschild", "--twist", "nu", "--t", "2", "--max-degree", method == std::string("bar") ? "1" : "4",
                     "--method", method});
        REQUIRE(b.code == 0);
        json d = b.report()["dims"];
        for (size_t i = 0; i < d.size(); ++i) CHECK(d[i] == j["dims"][i]);
    }
}

TEST_CASE("periodicity of M") {
    Run r = run({"periodicity", "M", "--twist", "nu", "--t", "2", "--max-shift", "4", "--max-period", "4"});
    REQUIRE(r.code == 0);
    json c = r.report()["certificate"];
    CHECK(c["found"] == true);
    CHECK(c["shift"] == 0);
    CHECK(c["period"] == 1);
    CHECK(c["verified"] == true);
    // negative verdicts still exit 0
    Run k = run({"periodicity", "k", "--twist", "nu", "--t", "2", "--max-shift", "1", "--max-period", "1"});
    CHECK(k.code == 0);
    CHECK(k.report()["certificate"]["found"] == false);
}

TEST_CASE("resolve with zero steps") {
    Run r = run({"resolve", "M", "--steps", "0"});
    REQUIRE(r.code == 0);
    json j = r.report();
    CHECK(j["cover_only"] == true);
    CHECK(j["ranks"] == json::array({1}));
}

TEST_CASE("reports are byte-identical across runs") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"hochschild", "--twist", "nu", "--t", "2", "--max-degree", "4", "--products"},
             {"fg-check", "M_1_0", "--twist", "nu", "--t", "2"},
             {"variety-dim", "k", "--twist", "nu", "--t", "2"},
             {"nakayama", "--seed", "7"},
             {"ext", "M", "--twist", "nu", "--t", "2", "--max-degree", "3"}}) {
        Run a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("other commands") {
    Run fg = run({"fg-check", "M_1_0", "--twist", "nu", "--t", "2"});
    REQUIRE(fg.code == 0);
    CHECK(fg.report()["evidence"]["verdict"] == "FailWitness");
    Run fgm = run({"fg-check", "M", "--twist", "nu", "--t", "2"});
    REQUIRE(fgm.code == 0);
    CHECK(fgm.report()["evidence"]["verdict"] == "PassEvidence");
    Run vd = run({"variety-dim", "k", "--twist", "nu", "--t", "2"});
    REQUIRE(vd.code == 0);
    CHECK(vd.report()["dim"] == 2);
    Run sc = run({"strong-check", "--twist", "nu", "--t", "2", "--index", "2", "--n", "2"});
    CHECK(sc.code == 0);
    Run nk = run({"nakayama", "--q", "3"});
    REQUIRE(nk.code == 0);
    Run rd = run({"reduce", "M", "--twist", "nu", "--t", "2", "--index", "2"});
    CHECK(rd.code == 0);
}

TEST_CASE("builtin emit round-trips through the parser") {
    const auto path = std::filesystem::temp_directory_path() / "twistcoh_cli_builtin.txt";
    Run e = run({"builtin", "--q", "3", "--emit", path.string()});
    REQUIRE(e.code == 0);
    Run h = run({"-w", path.string(), "hochschild", "--twist", "nu", "--t", "2", "--max-degree", "4", "--method",
                 "builtin"});
    REQUIRE(h.code == 0);
    CHECK(h.report()["dims"] == json::array({2, 0, 1, 0, 1}));
    std::filesystem::remove(path);
}

TEST_CASE("errors") {
    Run none = run({});
    CHECK(none.code == 2);
    Run bad = run({"frobnicate"});
    CHECK(bad.code == 2);
    Run missing = run({"resolve", "NoSuchModule"});
    CHECK(missing.code == 1);
    json j = missing.report();
    CHECK(j["error"]["kind"] == "DanglingReference");
    const auto path = std::filesystem::temp_directory_path() / "twistcoh_cli_bad.txt";
    std::ofstream(path) << "algebra A\nfield Q\ndim x\nend\n";
    Run syn = run({"-w", path.string(), "nakayama"});
    CHECK(syn.code == 1);
    json s = syn.report();
    CHECK(s["error"]["kind"] == "SyntaxError");
    CHECK(s["error"]["line"] == 3);
    std::filesystem::remove(path);
}
