#include "doctest.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Outcome {
    int code = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
Outcome cli(const std::string &args)
{
    const std::string cmd = std::string(SPIRALLOG_CLI) + " " + args + " 2>&1";
    Outcome o;
    FILE *p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0)
        o.out.append(buf.data(), got);
    const int status = pclose(p);
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

} // namespace

TEST_CASE("lambda outside the range exits 2")
{
    const auto o = cli("verify --lambda 1.5");
    CHECK(o.code == 2);
    CHECK(o.out.find("lambda out of (0,1]") != std::string::npos);
}

TEST_CASE("usage errors exit 2")
{
    CHECK(cli("").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("verify --family SPIRAL").code == 2);
    CHECK(cli("verify --lambda abc").code == 2);
    CHECK(cli("report --in /nonexistent_spirallog_dir").code == 2);
}

TEST_CASE("help exits 0")
{
    const auto o = cli("--help");
    CHECK(o.code == 0);
    CHECK(o.out.find("verify") != std::string::npos);
}

TEST_CASE("clean sweep exits 0")
{
    const auto o = cli("verify --family G --lambda 0.5 --seeds 100");
    CHECK(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["summary"]["failed"] == 0);
    CHECK(doc["seeds"] == 100);
}

TEST_CASE("negative controls exit 1")
{
    CHECK(cli("verify --family ST_SS --lambda 1 --include-negative-controls").code == 1);
}

TEST_CASE("boundary to a file")
{
    const auto o = cli("boundary --lambda 0.6 --no-image --out cli_boundary.csv");
    CHECK(o.code == 0);
    std::ifstream in("cli_boundary.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "re,im");
    bool vertex = false;
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto c = line.find(',');
        const double x = std::stod(line.substr(0, c)), y = std::stod(line.substr(c + 1));
        vertex = vertex || (std::abs(x - std::pow(2.0, 0.6)) < 1e-12 && std::abs(y) < 1e-12);
    }
    CHECK(rows == 1001);
    CHECK(vertex);
    std::remove("cli_boundary.csv");
}

TEST_CASE("report over written runs")
{
    std::filesystem::remove_all("cli_runs");
    std::filesystem::create_directories("cli_runs");
    CHECK(cli("gamma --lambda 0.5 --seeds 5 --out cli_runs/gamma.json").code == 0);
    CHECK(cli("hankel --lambda 0.5 --seeds 5 --out cli_runs/hankel.json").code == 0);
    const auto o = cli("report --in cli_runs");
    CHECK(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    CHECK(doc["runs"] == 2);
    CHECK(doc["lambda"] == 0.5);
    std::filesystem::remove_all("cli_runs");
}

TEST_CASE("map and fs run")
{
    CHECK(cli("map --lambda 0.5 --function N_F --n 2 --out cli_map.csv").code == 0);
    std::remove("cli_map.csv");
    const auto o = cli("fs --lambda 1 --seeds 4 --delta-count 10 --format csv");
    CHECK(o.code == 0);
    CHECK(o.out.rfind("check,subject", 0) == 0);
}
