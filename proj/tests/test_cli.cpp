#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in_file = std::string(std::tmpnam(nullptr)) + ".in";
    {
        std::ofstream f(in_file);
        f << stdin_text;
    }
    std::string cmd = std::string(OGW_CLI_PATH) + " " + args + " < " + in_file + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::remove(in_file.c_str());
    return r;
}

const char* kSample45 =
    "1 2 4 8 10\n"
    "3 5 6 12 16\n"
    "7 11 13 14 18\n"
    "9 15 17 19 20\n";

}  // namespace

TEST_CASE("cli dispatch examples") {
    CliResult r = run_cli("count sst 3,2,1 --shifted");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("symmetrical -", kSample45);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run_cli("lr gr 2,1 2,1 3,2,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
}

TEST_CASE("cli exit codes") {
    // false answers exit 1
    CliResult r = run_cli("symmetrical -", "1 2 3\n4 5 6\n");
    CHECK(r.exit_code == 1);
    CHECK(r.out == "false\n");

    r = run_cli("isotropic -", "n=1\n0,1,0\n");
    CHECK(r.exit_code == 1);

    // usage errors exit 2
    CHECK(run_cli("no-such-verb").exit_code == 2);
    CHECK(run_cli("count syt 3,oops").exit_code == 2);
    CHECK(run_cli("verify all -n 0").exit_code == 2);
    CHECK(run_cli("undouble -", "1 2 3\n4 5 6\n").exit_code == 2);
    CHECK(run_cli("lr og 3 1 3,1 -n 2").exit_code == 2);  // shape outside the rank box
}

TEST_CASE("cli json output carries a schema version") {
    CliResult r = run_cli("--json lr og 2 1 2,1 -n 2");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["verb"] == "lr-og");
    CHECK(j["value"] == "1");

    r = run_cli("--json verify square -n 2 --samples 3 --seed 7");
    REQUIRE(r.exit_code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["ok"] == true);
    CHECK(j["criteria"].size() == 1);
}

TEST_CASE("cli output is deterministic") {
    for (const std::string args :
         {std::string("lr pieri -n 2"), std::string("sample-isotropic -n 2 --seed 9"),
          std::string("--json verify all -n 1 --seed 5"),
          std::string("dual-classes 2,2 --inner 1")}) {
        CliResult a = run_cli(args);
        CliResult b = run_cli(args);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("cli pipelines") {
    CliResult flag = run_cli("flag 2 0 -n 2");
    REQUIRE(flag.exit_code == 0);
    CHECK(flag.out == "n=2\n0,0,0,1,0\n0,0,0,0,1\n");

    CliResult wr = run_cli("wronskian -", flag.out);
    REQUIRE(wr.exit_code == 0);
    CHECK(wr.out == "0,0,0,0,0,0,1\n");

    CliResult sample = run_cli("sample-isotropic -n 2 --seed 11");
    REQUIRE(sample.exit_code == 0);
    CHECK(run_cli("isotropic -", sample.out).exit_code == 0);
    CHECK(run_cli("schubert og - - 0", sample.out).exit_code == 0);
    std::string sample_wr = run_cli("wronskian -", sample.out).out;
    while (!sample_wr.empty() && sample_wr.back() == '\n') sample_wr.pop_back();
    CHECK(run_cli("perfect-square " + sample_wr).exit_code == 0);

    CliResult rect = run_cli("rectify --shape -", ". 1\n2 3\n");
    CHECK(rect.out == "2,1\n");

    CliResult dbl = run_cli("double -", "shifted\n1 2\n. 3\n");
    CHECK(dbl.out == "1 2 4\n3 5 6\n");
    CliResult und = run_cli("undouble -", dbl.out);
    CHECK(und.out == "shifted\n1 2\n. 3\n");

    CliResult seg = run_cli("lr segments 1,1,1,1,1,1 -n 2");
    CHECK(seg.out == "5\n");

    CliResult sub = run_cli("subtableau - 19 20", kSample45);
    CHECK(sub.out == ".\n.\n.\n. . . 19 20\n");

    CliResult div = run_cli("divisibility - 0", "n=2\n0,0,0,1,0\n0,0,0,0,1\n");
    CHECK(div.exit_code == 0);
    CHECK(div.out.find("multiplicity=6") != std::string::npos);
}
