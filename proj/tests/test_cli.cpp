#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "polymat/io.hpp"
#include "polymat/verify.hpp"

using nlohmann::json;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe))
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string cli = POLYMAT_CLI_PATH;

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

const std::string octahedron_text =
    "ring 6\n"
    "x1*x3, x1*x4, x1*x5, x1*x6\n"
    "x2*x3, x2*x4, x2*x5, x2*x6\n"
    "x3*x5, x3*x6, x4*x5, x4*x6\n";

const std::string cubic_text =
    "ring 4\n"
    "x1*x2*x3, x2^2*x3, x2*x3^2\n"
    "x1*x2*x4, x2^2*x4, x2*x4^2\n"
    "x1*x3*x4, x3^2*x4, x3*x4^2\n"
    "x2*x3*x4\n";

}  // namespace

TEST_CASE("ass lists the three displayed primes") {
    auto file = write_temp("polymat_cli_octa.ideal", octahedron_text);
    CommandResult result = run_command(cli + " ass -t 1 " + file.string());
    CHECK(result.exit_code == 0);
    CHECK(result.output == "(x1,x2,x3,x4)\n(x1,x2,x5,x6)\n(x3,x4,x5,x6)\n");
}

TEST_CASE("dstab and astab on the regression cubic") {
    auto file = write_temp("polymat_cli_cubic.ideal", cubic_text);
    CommandResult dstab = run_command(cli + " dstab " + file.string());
    CHECK(dstab.exit_code == 0);
    CHECK(dstab.output.find("dstab = 1") == 0);
    CommandResult astab = run_command(cli + " astab " + file.string());
    CHECK(astab.exit_code == 0);
    CHECK(astab.output.find("astab = 2") == 0);
}

TEST_CASE("family construction pipes into stability") {
    CommandResult result = run_command(cli + " veronese 4 2 --caps 1,1,1,1 | " + cli + " astab");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("astab = 2") == 0);
}

TEST_CASE("round trip through power and parse") {
    auto file = write_temp("polymat_cli_roundtrip.ideal", "ring 2\nx1, x2\n");
    CommandResult result = run_command(cli + " power -t 2 " + file.string());
    CHECK(result.exit_code == 0);
    CHECK(polymat::parse_ideal(result.output) ==
          polymat::parse_ideal("ring 2\nx1^2, x1*x2, x2^2\n"));
}

TEST_CASE("parse errors exit with status 2") {
    auto file = write_temp("polymat_cli_bad.ideal", "ring 2\nx9\n");
    CommandResult result = run_command(cli + " info " + file.string());
    CHECK(result.exit_code == 2);
}

TEST_CASE("budget exhaustion exits with status 3") {
    auto file = write_temp("polymat_cli_budget.ideal", "ring 3\nx1^2*x2, x2^2*x3, x1*x3^2\n");
    CommandResult result = run_command(cli + " decompose --budget 1 " + file.string());
    CHECK(result.exit_code == 3);
}

TEST_CASE("JSON outputs parse and match the documented schemas") {
    auto file = write_temp("polymat_cli_octa2.ideal", octahedron_text);

    SUBCASE("info") {
        CommandResult result = run_command(cli + " info --json " + file.string());
        CHECK(result.exit_code == 0);
        json j = json::parse(result.output);
        CHECK(j["n"] == 6);
        CHECK(j["generators"] == 12);
        CHECK(j["matroidal"] == true);
        CHECK(j["ell"] == 6);
    }
    SUBCASE("gamma") {
        CommandResult result = run_command(cli + " gamma --json " + file.string());
        json j = json::parse(result.output);
        CHECK(j["vertices"].size() == 6);
        CHECK(j["edges"].size() == 15);
        CHECK(j["components"].size() == 1);
    }
    SUBCASE("decompose") {
        CommandResult result = run_command(cli + " decompose --json " + file.string());
        json j = json::parse(result.output);
        CHECK(j["components"].size() == 3);
        CHECK(j["ass"].size() == 3);
    }
    SUBCASE("stability report") {
        CommandResult result = run_command(cli + " astab --json " + file.string());
        json j = json::parse(result.output);
        CHECK(j["astab"] == 2);
        CHECK(j["dstab"] == 2);
        CHECK(j["certified"] == true);
        CHECK(j["ell"] == 6);
        CHECK(j["trace"].is_array());
    }
    SUBCASE("depth with Betti table") {
        CommandResult result = run_command(cli + " depth --betti --json " + file.string());
        json j = json::parse(result.output);
        CHECK(j["depth"] == 1);
        CHECK(j["pd"] == 5);
        CHECK(j["betti"].is_array());
    }
    SUBCASE("ideal emission") {
        CommandResult result = run_command(cli + " power -t 1 --json " + file.string());
        json j = json::parse(result.output);
        CHECK(j["n"] == 6);
        CHECK(j["generators"].size() == 12);
    }
}

TEST_CASE("localize emits the displayed prime") {
    auto file = write_temp("polymat_cli_octa3.ideal", octahedron_text);
    CommandResult result = run_command(cli + " localize --vars 2,3,4,5,6 " + file.string());
    CHECK(result.exit_code == 0);
    CHECK(polymat::parse_ideal(result.output) == polymat::parse_ideal("ring 6\nx3, x4, x5, x6\n"));
}

TEST_CASE("enumerate emits a parseable stream") {
    CommandResult result = run_command(cli + " enumerate 4 2 --json");
    CHECK(result.exit_code == 0);
    json j = json::parse(result.output);
    CHECK(j["ideals"].size() == 10);

    CommandResult sampled = run_command(cli + " enumerate 6 3 --random --seed 7 --count 3 --json");
    json js = json::parse(sampled.output);
    CHECK(js["ideals"].size() == 3);
}

TEST_CASE("verify subcommand statuses and exit codes") {
    CommandResult result = run_command(cli + " verify --checks ex-2.2,ex-2.11 --json");
    CHECK(result.exit_code == 0);
    json j = json::parse(result.output);
    REQUIRE(j["checks"].size() == 2);
    CHECK(j["checks"][0]["id"] == "ex-2.2");
    CHECK(j["checks"][0]["status"] == "PASS");
    CHECK(j["checks"][1]["status"] == "PASS");
}
