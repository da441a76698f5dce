#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "json.hpp"
#include "qci/module.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("QCI_CLI");
    REQUIRE_MESSAGE(p != nullptr, "QCI_CLI must point at the built binary");
    return p;
}

CliResult run(const std::string& args) {
    std::filesystem::path tmp =
        std::filesystem::temp_directory_path() / "qci_cli_test_out.txt";
    std::string command = "\"" + cli_path() + "\" " + args + " > \"" +
                          tmp.string() + "\" 2>/dev/null";
    int rc = std::system(command.c_str());
    std::ifstream in(tmp, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    return CliResult{WEXITSTATUS(rc), buffer.str()};
}

} // namespace

TEST_CASE("algebra reports the spec as a frozen golden") {
    CliResult r = run("algebra --c 2 --a 3 --p 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "{\n"
          "  \"a\": 3,\n"
          "  \"a_bar\": 3,\n"
          "  \"c\": 2,\n"
          "  \"dim\": 9,\n"
          "  \"p\": 7,\n"
          "  \"q\": 2\n"
          "}\n");
    json j = json::parse(run("algebra --c 3 --a 2 --p 5").out);
    CHECK(j["dim"] == 8);
    CHECK(j["a_bar"] == 2);
    CHECK(j["q"] == 4);
    // Validated q override.
    CHECK(json::parse(run("algebra --q 4").out)["q"] == 4);
    CHECK(run("algebra --q 3").exit_code == 2);
}

TEST_CASE("degenerate and unsuitable fields are reported, not accepted") {
    CliResult degenerate = run("algebra --c 2 --a 2 --p 2");
    CHECK(degenerate.exit_code == 2);
    json j = json::parse(degenerate.out);
    CHECK(j["error"]["kind"] == "field_unsuitable");
    CliResult no_root = run("counterexample --p 11 --a 3");
    CHECK(no_root.exit_code == 2);
    CHECK(json::parse(no_root.out)["error"]["kind"] == "field_unsuitable");
    // The message names the violated divisibility precondition.
    CHECK(json::parse(no_root.out)["error"]["message"].get<std::string>().find(
              "does not divide p - 1") != std::string::npos);
}

TEST_CASE("variety subcommand on the named designators") {
    json k = json::parse(run("variety --module k").out);
    CHECK(k["points"] == json({{0, 1}, {1, 0}, {1, 1}, {1, 6}}));
    CHECK(k["trivial"] == false);
    CHECK(k.contains("note"));

    json cyc = json::parse(run("variety --module cyclic:1,1").out);
    CHECK(cyc["points"] == json({{1, 1}}));

    json fr = json::parse(run("variety --module free:1").out);
    CHECK(fr["points"] == json::array());
    CHECK(fr["trivial"] == true);

    CHECK(run("variety --module nonsense").exit_code == 2);
    CHECK(run("variety --module cyclic:1,2,3").exit_code == 2);
    CHECK(run("variety --module file:/does/not/exist.json").exit_code == 2);
}

TEST_CASE("file designator loads a serialized module") {
    qci::AlgebraSpec spec = qci::AlgebraSpec::create(2, 3, 7);
    qci::ModuleRep m = qci::cyclic_u_module(spec, {1, 1}).module;
    std::filesystem::path file =
        std::filesystem::temp_directory_path() / "qci_cli_module.json";
    {
        std::ofstream out(file);
        out << m.to_json().dump();
    }
    json v = json::parse(run("variety --module file:" + file.string()).out);
    CHECK(v["points"] == json({{1, 1}}));
    // Mismatched algebra flags are rejected.
    CHECK(run("variety --a 2 --p 5 --module file:" + file.string()).exit_code ==
          2);
    std::error_code ec;
    std::filesystem::remove(file, ec);
}

TEST_CASE("resolve subcommand matches the library goldens") {
    json k = json::parse(run("resolve --module k --depth 8").out);
    CHECK(k["betti"] == json({1, 2, 3, 4, 5, 6, 7, 8, 9}));
    CHECK(k["complexity"] == 2);
    CHECK(k["window"] == json({2, 8}));
    json fr = json::parse(run("resolve --module free:1 --depth 6").out);
    CHECK(fr["betti"] == json({1, 0, 0, 0, 0, 0, 0}));
    CHECK(fr["complexity"] == 0);
    json cyc = json::parse(run("resolve --module cyclic:1,1 --depth 8").out);
    CHECK(cyc["betti"] == json({1, 1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyc["complexity"] == 1);
    // Too shallow for a complexity estimate.
    CHECK(run("resolve --module k --depth 3").exit_code == 2);
}

TEST_CASE("counterexample subcommand exit codes") {
    CliResult ok = run("counterexample");
    CHECK(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["counterexample"]["containment_holds"] == false);
    CHECK(j["counterexample"]["v_bm"]["points"] == json({{1, 6}}));
    CHECK(j["corollary"]["equality_holds"] == false);

    CliResult bad_mu = run("counterexample --mu 1,1");
    CHECK(bad_mu.exit_code == 2);
    CHECK(json::parse(bad_mu.out)["error"]["message"].get<std::string>().find(
              "coincide") != std::string::npos);
    CHECK(run("counterexample --mu 1,0").exit_code == 2);
    CHECK(run("counterexample --lambda 0,0").exit_code == 2);
}

TEST_CASE("suite subcommand") {
    CliResult ok = run("suite --seed 3");
    CHECK(ok.exit_code == 0);
    CHECK(json::parse(ok.out)["all_passed"] == true);
    CliResult faulty = run("suite --inject-fault");
    CHECK(faulty.exit_code == 1);
    CHECK(json::parse(faulty.out)["all_passed"] == false);
}

TEST_CASE("reports match the committed golden files byte for byte") {
#ifdef QCI_GOLDEN_DIR
    auto golden = [](const std::string& name) {
        std::ifstream in(std::filesystem::path(QCI_GOLDEN_DIR) / name,
                         std::ios::binary);
        REQUIRE(in.good());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    };
    CHECK(run("counterexample").out == golden("counterexample_default.json"));
    CHECK(run("resolve --module cyclic:1,1 --depth 8").out ==
          golden("resolve_cyclic_11.json"));
#else
    FAIL("QCI_GOLDEN_DIR was not configured");
#endif
}

TEST_CASE("output file and table rendering") {
    std::filesystem::path file =
        std::filesystem::temp_directory_path() / "qci_cli_output.json";
    CliResult r = run("algebra --output " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    std::ifstream in(file);
    json j = json::parse(in);
    CHECK(j["dim"] == 9);
    std::error_code ec;
    std::filesystem::remove(file, ec);

    CliResult table = run("variety --module cyclic:1,1 --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.out.find("points: [[1,1]]") != std::string::npos);
}
