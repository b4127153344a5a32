#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"
#include "report.hpp"
#include "tables.hpp"

using namespace twosq::cli;

namespace {

struct Out {
    int rc;
    std::string out, err;
};

Out call(std::vector<std::string> args) {
    std::ostringstream o, e;
    int rc = run(args, o, e);
    return {rc, o.str(), e.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("sieve-count CSV") {
    auto r = call({"sieve-count", "--x", "1000"});
    REQUIRE(r.rc == 0);
    CHECK(r.out.find("# version: 0.1.0") != std::string::npos);
    CHECK(r.out.find("\r\n") != std::string::npos);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "x,count");
    CHECK(lines[1] == "1000,330");
    auto z = call({"--include-zero", "sieve-count", "--x", "1000"});
    CHECK(data_lines(z.out)[1] == "1000,331");
}

TEST_CASE("JSON output parses") {
    auto r = call({"--format", "json", "constants", "--q", "5"});
    REQUIRE(r.rc == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["metadata"]["q"] == "5");
    bool found = false;
    for (auto& row : j["rows"])
        if (row["name"] == "c0_1") {
            CHECK(double(row["value"]) == doctest::Approx(0.604541230).epsilon(1e-9));
            found = true;
        }
    CHECK(found);
    auto alias = call({"constants", "--q", "5", "--json"});
    CHECK(nlohmann::json::parse(alias.out)["title"] == j["title"]);
}

TEST_CASE("markdown output") {
    auto r = call({"--format", "md", "pairs", "--x", "100", "--q", "5"});
    REQUIRE(r.rc == 0);
    CHECK(r.out.rfind("### ", 0) == 0);
    CHECK(r.out.find("|---|") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(call({"pairs", "--x", "100", "--q", "7"}).rc == 2);
    CHECK(call({"no-such-command"}).rc == 2);
    CHECK(call({}).rc == 2);
    CHECK(call({"--help"}).rc == 0);
    CHECK(call({"table", "--id", "9"}).rc == 2);
    CHECK(call({"sieve-count", "--x", "2e10"}).rc == 2);
    CHECK(call({"integral-S", "--q", "5", "--v", "0", "--H", "1e4", "--eps", "0.001"}).rc == 2);
    // two nodes per piece cannot meet the doubling tolerance
    auto acc = call({"integral-S", "--q", "5", "--v", "0", "--H", "1e4", "--nodes", "2"});
    CHECK(acc.rc == 3);
}

TEST_CASE("table 6 at H = 100") {
    auto r = call({"table", "--id", "6", "--H", "100"});
    REQUIRE(r.rc == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "H,actual,prop,J1,J2,J3,err_prop,err_J1,err_J2,err_J3");
    CHECK(lines[1].rfind("100,-1.3968,", 0) == 0);
    CHECK(lines[1].find(",-1.5059,-1.4354,-1.4094,") != std::string::npos);
}

TEST_CASE("table 1 defaults to reference data, computes with --x") {
    auto r = call({"table", "--id", "1"});
    REQUIRE(r.rc == 0);
    CHECK(data_lines(r.out)[1] == "0,0,4108407474,reference");
    auto c = call({"table", "--id", "1", "--x", "1e5"});
    REQUIRE(c.rc == 0);
    CHECK(data_lines(c.out)[1].find(",computed") != std::string::npos);
}

TEST_CASE("table 2 at 1e9 counts zero") {
    twosq::cli::TableOptions opt;
    opt.x = 1e9;
    auto t = reproduce_table(2, opt);
    bool found = false;
    for (auto& row : t.table.rows)
        if (row[0] == "1e+09" || row[0] == "1000000000") {
            CHECK(row[1] == "173229059");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("cache directory from the environment") {
    auto dir = std::filesystem::temp_directory_path() / "twosq_cli_cache_test";
    std::filesystem::remove_all(dir);
    auto r = call({"--cache-dir", dir.string(), "sieve-count", "--x", "5000"});
    CHECK(r.rc == 0);
    CHECK(std::filesystem::exists(dir));
    std::filesystem::remove_all(dir);
}

TEST_CASE("fixed-point formatting") {
    CHECK(fixed(-0.00004, 4) == "0.0000");
    CHECK(fixed(0.12345, 4) == "0.1235");
    CHECK(fixed(-2.5, 0) == "-3");
}
