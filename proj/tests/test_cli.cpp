#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QGRASS_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

size_t count(const std::string& hay, const std::string& needle) {
    size_t c = 0;
    for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("cli: cohomology table") {
    Run r = run("derham --m 2 --n 1 --ell 3 --r 1 --format csv");
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "s,dim_D,rank_d,dim_H,expected,critical");
    std::vector<std::string> h;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string cell;
        for (int k = 0; k < 4; ++k) std::getline(cells, cell, ',');
        h.push_back(cell);
    }
    CHECK(h == std::vector<std::string>{"1", "3", "3", "1"});
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("cli: filtration report") {
    Run r = run("loewy --m 3 --n 2 --ell 3 --r 2 --s 10");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["rows"][0]["loewy_length"] == 3);
    CHECK(j["rows"][0]["E0"] == 1);
    CHECK(j["rows"][0]["E"] == 3);
    Run again = run("loewy --m 3 --n 2 --ell 3 --r 2 --s 10");
    CHECK(again.out == r.out);
}

TEST_CASE("cli: inclusion net as DOT") {
    Run r = run("net --m 3 --n 2 --ell 3 --r 2 --s 12 --format dot");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("digraph", 0) == 0);
    CHECK(count(r.out, " -> ") == 3);
    CHECK(count(r.out, "kappa=") == 4);
}

TEST_CASE("cli: socle, relations, dims, identities") {
    Run s = run("socle --m 3 --n 2 --ell 3 --r 2 --s 12");
    REQUIRE(s.status == 0);
    auto js = nlohmann::json::parse(s.out);
    CHECK(js["rows"][0]["certificate"]["summands"] == 3);
    CHECK(run("relations --m 2 --n 2 --ell 3 --r 1 --s 2..4").status == 0);
    Run d = run("dims --m 2 --n 1 --ell 3 --r 1 --all-s");
    REQUIRE(d.status == 0);
    auto jd = nlohmann::json::parse(d.out);
    CHECK(jd["rows"].size() == 6);
    CHECK(jd["rows"][2]["enumerated"] == 5);
    Run i = run("identities --ell 5 --order 10 --smax 12");
    CHECK(i.status == 0);
    CHECK(nlohmann::json::parse(i.out)["ok"] == true);
}

TEST_CASE("cli: weight block exactness") {
    Run r = run("poincare --m 2 --n 1 --ell 3 --lambda '1,0|0'");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["exact"] == true);
    CHECK(j["shape"]["r"] == 2);
}

TEST_CASE("cli: configuration errors") {
    Run even = run("identities --ell 4 --order 4");
    CHECK(even.status == 2);
    auto j = nlohmann::json::parse(even.out);
    CHECK(j["error"] == "config");
    CHECK(run("loewy --m 3 --n 2 --ell 3 --r 2 --s 40").status == 2);
    CHECK(run("derham --m 2 --n 1 --ell 3 --r 1 --format dot").status == 2);
    CHECK(run("socle --m 1 --n 1 --ell 3 --r 1 --s 1").status == 2);
    CHECK(run("poincare --m 2 --n 1 --ell 3 --lambda '0,0|0'").status == 2);
    CHECK(run("poincare --m 2 --n 1 --ell 3 --lambda 1,0").status == 2);
    CHECK(run("dims --m 2 --n 1 --ell 3 --r 1 --order 6").status == 2);
    CHECK(run("frobnicate").status == 2);
}

TEST_CASE("cli: output file") {
    auto path = std::filesystem::temp_directory_path() / "qgrass_cli_test.csv";
    Run r = run("derham --m 2 --n 1 --ell 3 --r 1 --format csv --out " + path.string());
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::string head;
    std::getline(f, head);
    CHECK(head == "s,dim_D,rank_d,dim_H,expected,critical");
    std::filesystem::remove(path);
}
