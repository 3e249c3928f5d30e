#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ICDOF_BIN) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmpdir() {
    static std::string dir = [] {
        char tpl[] = "/tmp/icdof_cli_XXXXXX";
        REQUIRE(mkdtemp(tpl) != nullptr);
        return std::string(tpl);
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    std::string path = tmpdir() + "/" + name;
    std::ofstream f(path);
    f << content;
    REQUIRE(f.good());
    return path;
}

std::string all_ones_matrix() {
    return write_file("ones.json",
                      R"({"K":3,"entries":[["1","1","1"],["1","1","1"],["1","1","1"]]})");
}

std::string coin_family() {
    return write_file("coins.json",
                      R"([{"support":["0","1"],"probs":["1/2","1/2"]},
                          {"support":["0","1"],"probs":["1/2","1/2"]},
                          {"support":["0","1"],"probs":["1/2","1/2"]}])");
}

json load(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    return json::parse(f);
}

json normalized(json j) {
    j.erase("timestamp");
    return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check on the all-ones matrix exits 2 with a witness report") {
    RunResult r = run("check --matrix " + all_ones_matrix() + " --N 2 --d 0");
    CHECK(r.exit_code == 2);
    json rep = json::parse(r.out);
    CHECK(rep["schema"] == 1);
    CHECK(rep["verdict"] == "witness");
    CHECK(rep.contains("timestamp"));
}

TEST_CASE("check certifies a non-colliding diagonal with exit 0") {
    std::string m = write_file("big.json",
                               R"({"K":3,"entries":[["7","1","1"],["1","11","1"],["1","1","13"]]})");
    RunResult r = run("check --matrix " + m + " --N 2 --d 0");
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["verdict"] == "certificate");
}

TEST_CASE("errors exit 1 with a named cause") {
    std::string m = write_file("zero.json",
                               R"({"K":3,"entries":[["1","0","1"],["1","1","1"],["1","1","1"]]})");
    RunResult r = run("check --matrix " + m + " --N 2 --d 0");
    CHECK(r.exit_code == 1);
    json rep = json::parse(r.out);
    CHECK(rep["verdict"] == "error");
    CHECK(rep["zero_positions"][0] == json::array({1, 2}));  // 1-based

    RunResult missing = run("check --matrix /nonexistent.json --N 2 --d 0");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("canonicalize reports the identity record on canonical input") {
    RunResult r = run("canonicalize --matrix " + all_ones_matrix());
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["canonical"]["h"] == "1");
    CHECK(rep["canonical"]["rows"] == json::array({"1", "1", "1"}));
    CHECK(rep["canonical"]["cols"] == json::array({"1", "1", "1"}));
}

TEST_CASE("wset dumps the sorted truncation") {
    RunResult r = run("wset --matrix " + all_ones_matrix() + " --N 3 --d 0");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["values"] == json::array({"0", "1", "2"}));
}

TEST_CASE("entropy prints the exact-arithmetic entropy") {
    RunResult r = run("entropy --rvs " + coin_family() + " --coeffs 1,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("H = 1.81128") != std::string::npos);
}

TEST_CASE("verify runs a seeded suite with exit 0 on zero violations") {
    RunResult r = run("verify --suite subadditivity --instances 10 --seed 5");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["verdict"] == "all-hold");
    CHECK(rep["violations"] == 0);
    CHECK(rep["suites"][0]["instances"] == 10);
}

TEST_CASE("seeded reports are byte-identical across reruns and worker counts") {
    std::string m = all_ones_matrix();
    std::string o1 = tmpdir() + "/v1.json", o2 = tmpdir() + "/v2.json",
                o3 = tmpdir() + "/v3.json";
    run("verify --suite all --instances 20 --seed 9 --workers 1 --out " + o1);
    run("verify --suite all --instances 20 --seed 9 --workers 1 --out " + o2);
    run("verify --suite all --instances 20 --seed 9 --workers 4 --out " + o3);
    CHECK(normalized(load(o1)) == normalized(load(o2)));
    CHECK(normalized(load(o1)) == normalized(load(o3)));

    std::string c1 = tmpdir() + "/c1.json", c2 = tmpdir() + "/c2.json";
    run("check --matrix " + m + " --N 3 --d 1 --workers 1 --out " + c1);
    run("check --matrix " + m + " --N 3 --d 1 --workers 4 --out " + c2);
    CHECK(normalized(load(c1)) == normalized(load(c2)));
}

TEST_CASE("oracle agrees with check") {
    std::string m = write_file("half.json",
                               R"({"K":3,"entries":[["1/2","1","1"],["1","9","1"],["1","1","9"]]})");
    RunResult fast = run("check --matrix " + m + " --N 3 --d 0 --out " + tmpdir() + "/f.json");
    RunResult slow = run("oracle --matrix " + m + " --N 3 --d 0 --out " + tmpdir() + "/s.json");
    CHECK(fast.exit_code == 2);
    CHECK(slow.exit_code == 2);
    CHECK(load(tmpdir() + "/f.json")["verdict"] == load(tmpdir() + "/s.json")["verdict"]);
}

TEST_CASE("replay subcommands produce traces and probes") {
    std::string m = all_ones_matrix(), rvs = coin_family();
    RunResult base = run("replay base --matrix " + m + " --rvs " + rvs + " --a 1 --b 1");
    CHECK(base.exit_code == 0);
    CHECK(json::parse(base.out)["verdict"] == "ok");

    RunResult step =
        run("replay step --matrix " + m + " --rvs " + rvs + " --a 1,1 --b 1,1");
    CHECK(step.exit_code == 0);

    std::string m2 = write_file("g2.json",
                                R"({"K":3,"entries":[["2","1","1"],["1","1","1"],["1","1","1"]]})");
    RunResult probe = run("replay probe --matrix " + m2 + " --rvs " + rvs +
                          " --gnum '[\"2\"]' --gden '[\"1\"]' --N 3 --d 0");
    CHECK(probe.exit_code == 0);
    json rep = json::parse(probe.out);
    CHECK(rep["probe"]["witness"]["user"] == 1);
}

TEST_CASE("symbolic check on a canonical matrix") {
    // g1 = h = 1 for the all-ones matrix: symbolic witness at N = 2, d = 1
    RunResult r = run("check --matrix " + all_ones_matrix() + " --N 2 --d 1 --symbolic --user 1");
    CHECK(r.exit_code == 2);
    json rep = json::parse(r.out);
    CHECK(rep["users"][0]["witness"]["symbolic"] == true);
}

}  // TEST_SUITE
