// Golden-file tests for the command-line tool: three reference commands are
// pinned byte-for-byte, plus exit-code checks for the error paths.

#include <catch2/catch.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(BINDUEL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.stdout_text.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(BINDUEL_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("golden: compute with both methods") {
    const RunResult run = run_cli("compute --alpha 3/10 --n 1 --r 1 --d 1 --method both");
    CHECK(run.exit_code == 0);
    CHECK(run.stdout_text == read_golden("compute_both.json"));
}

TEST_CASE("golden: exact trace csv") {
    const RunResult run = run_cli("trace --alpha 1/5 --r 3 --d 1 --from 0 --to 12 --method exact");
    CHECK(run.exit_code == 0);
    CHECK(run.stdout_text == read_golden("trace_unimodal.csv"));
}

TEST_CASE("golden: classify json") {
    const RunResult run = run_cli("classify --alpha 1/5 --r 3 --d 1");
    CHECK(run.exit_code == 0);
    CHECK(run.stdout_text == read_golden("classify_unimodal.json"));
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("compute --alpha 3/10").exit_code == 1);          // missing --n
    CHECK(run_cli("nonsense").exit_code == 1);                      // unknown subcommand
    CHECK(run_cli("compute --alpha 7/5 --n 1").exit_code == 1);     // alpha out of range
    CHECK(run_cli("mode --alpha 9/10 --r 3").exit_code == 1);       // not in the unimodal band
    CHECK(run_cli("trace --alpha 1/2 --to 4").exit_code == 0);
    CHECK(run_cli("simulate --alpha 1/2 --n 3 --trials 1000 --seed 5").exit_code == 0);
    CHECK(run_cli("simulate-doubleexp --alpha 1/2 --n 2 --trials 1000 --seed 5").exit_code == 0);
}

TEST_CASE("cli determinism: same flags, same bytes") {
    const std::string args = "simulate --alpha 3/10 --n 4 --r 2 --d 1 --trials 20000 --seed 99";
    CHECK(run_cli(args).stdout_text == run_cli(args).stdout_text);
}
