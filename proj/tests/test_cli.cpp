// Drives the installed CLI binary end to end: exit codes, output strings,
// model path resolution. The binary path arrives via PRIMCOH_CLI (set by the
// ctest properties).

#include "primcoh/model_io.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("PRIMCOH_CLI");
    REQUIRE_MESSAGE(p != nullptr, "PRIMCOH_CLI must point at the primcoh binary");
    return p;
}

RunResult run(const std::string& args, const std::string& envs = "") {
    const std::string cmd = envs + "\"" + cli_path() + "\" " + args + " 2>&1";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto dir = std::filesystem::temp_directory_path() / "primcoh_cli_tests";
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate builtin models passes") {
    for (const auto& id : primcoh::builtin_models()) {
        const auto res = run("validate " + id);
        CHECK(res.exit_code == 0);
        CHECK(res.out.find("result: PASS") != std::string::npos);
    }
}

TEST_CASE("help and usage") {
    CHECK(run("--help").exit_code == 0);
    CHECK(run("").exit_code == 2);            // a subcommand is required
    CHECK(run("frobnicate").exit_code == 2);  // unknown subcommand
    CHECK(run("check-flat kt").exit_code == 2); // --bundle is required
}

TEST_CASE("models lists the builtins") {
    const auto res = run("models");
    CHECK(res.exit_code == 0);
    for (const auto& id : primcoh::builtin_models()) {
        CHECK(res.out.find(id) != std::string::npos);
    }
}

TEST_CASE("cohomology of the invertible line bundle vanishes") {
    const auto res = run("cohomology kt --bundle L");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("VANISHES: yes") != std::string::npos);
}

TEST_CASE("check-flat failure exits 1") {
    const auto path = write_temp("notflat.json", R"({
      "name": "notflat", "m": 4,
      "d": [{"gen": 4, "terms": [["1", 1, 2]]}],
      "eta": [["1", 1, 2]],
      "bundles": {"bad": {"rank": 1, "A": [[[["-1", 4]]]], "Phi": [["2"]]}}
    })");
    const auto res = run("check-flat " + path.string() + " --bundle bad");
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("NOT FLAT") != std::string::npos);

    const auto res2 = run("cohomology " + path.string() + " --bundle bad");
    CHECK(res2.exit_code == 1);
}

TEST_CASE("input errors exit 2") {
    CHECK(run("validate /nonexistent/nowhere.json").exit_code == 2);
    CHECK(run("cohomology kt --bundle nosuch").exit_code == 2);

    const auto bad = write_temp("badcoeff.json",
                                R"({"name": "x", "m": 2, "eta": [["1/0", 1, 2]]})");
    CHECK(run("validate " + bad.string()).exit_code == 2);

    const auto res = run("sweep kt --e trivial --l E2 --max-n 2");
    CHECK(res.exit_code == 2); // E2 has rank 2, not a line bundle
}

TEST_CASE("validation failures exit 1 with a report") {
    const auto path = write_temp("dsq.json", R"({
      "name": "dsq", "m": 4,
      "d": [{"gen": 3, "terms": [["1", 1, 2]]}, {"gen": 4, "terms": [["1", 3, 4]]}]
    })");
    const auto res = run("validate " + path.string());
    CHECK(res.exit_code == 1);
    CHECK(res.out.find("result: FAIL") != std::string::npos);
    CHECK(res.out.find("d_squared_zero") != std::string::npos);
}

TEST_CASE("sweep and contract on kt") {
    const auto res = run("sweep kt --e E2 --l L --max-n 4 --dims");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("det(Phi_n) = n^2") != std::string::npos);
    CHECK(res.out.find("threshold: 1") != std::string::npos);

    const auto res2 = run("contract kt --bundle L --degree 2");
    CHECK(res2.exit_code == 0);
    CHECK(res2.out.find("result: PASS") != std::string::npos);

    const auto res3 = run("contract kt --bundle L");
    CHECK(res3.exit_code == 0);

    // singular Phi: contraction impossible on nonzero kernels
    const auto res4 = run("contract kt --bundle trivial --degree 1");
    CHECK(res4.exit_code == 1);
}

TEST_CASE("json format mirrors the text reports") {
    const auto res = run("--format json cohomology kt --bundle L");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"vanishes\": true") != std::string::npos);

    const auto res2 = run("cohomology kt --bundle L --format json");
    CHECK(res2.exit_code == 0);
    CHECK(res2.out == res.out);

    CHECK(run("--format yaml models").exit_code == 2);
}

TEST_CASE("PRIMCOH_MODEL_PATH resolves bare names") {
    const auto dir = std::filesystem::temp_directory_path() / "primcoh_cli_tests" / "modeldir";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "mymodel.json")
        << R"({"name": "mymodel", "m": 2, "eta": [["1", 1, 2]]})";
    const auto res =
        run("validate mymodel", "PRIMCOH_MODEL_PATH=\"" + dir.string() + "\" ");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("model mymodel") != std::string::npos);

    const auto res2 = run("validate mymodel", "PRIMCOH_MODEL_PATH=/nonexistent ");
    CHECK(res2.exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const std::string& cmd :
         {std::string("cohomology t4 --bundle trivial"),
          std::string("sweep kt --e trivial --l L --max-n 3 --dims"),
          std::string("--format json check-flat heis3xs1 --bundle L")}) {
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}

} // TEST_SUITE
