#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace {

std::string run(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    pclose(pipe);
    return out;
}

int run_status(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

const char* kBridged =
    "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n3 4\n";

}  // namespace

TEST_CASE("stats subcommand emits the fixed JSON schema") {
    write_file("cli_k4.edges", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    auto out = run("stats --in cli_k4.edges");
    CHECK(out.find("\"transitivity\": 1") != std::string::npos);
    CHECK(out.find("\"n\": 4") != std::string::npos);
    CHECK(out.find("\"triangles\": 4") != std::string::npos);
}

TEST_CASE("local subcommand prints one member per line") {
    write_file("cli_bridged.edges", kBridged);
    auto out = run("local --in cli_bridged.edges --seed 0 --cut 1 --sim adjacency");
    CHECK(out == "0\n1\n2\n3\n");
}

TEST_CASE("global subcommand prints node,cluster csv") {
    write_file("cli_bridged.edges", kBridged);
    auto out = run("global --in cli_bridged.edges --cut 3 --sim adjacency");
    std::istringstream is(out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "node,cluster");
    int rows = 0;
    std::set<std::string> clusters;
    while (std::getline(is, line)) {
        ++rows;
        clusters.insert(line.substr(line.find(',') + 1));
    }
    CHECK(rows == 8);
    CHECK(clusters.size() == 8);  // all singletons at cut 3
}

TEST_CASE("similarity and dendrogram emit u,v,weight csv") {
    write_file("cli_bridged.edges", kBridged);
    auto sim = run("similarity --in cli_bridged.edges --sim adjacency");
    CHECK(sim.rfind("u,v,weight\n", 0) == 0);
    CHECK(sim.find("3,4,0\n") != std::string::npos);
    auto den = run("dendrogram --in cli_bridged.edges --sim adjacency");
    CHECK(den.rfind("u,v,weight\n", 0) == 0);
}

TEST_CASE("byte-identical output across invocations") {
    write_file("cli_bridged.edges", kBridged);
    auto a = run("similarity --in cli_bridged.edges --sim laplacian --tau 1.5");
    auto b = run("similarity --in cli_bridged.edges --sim laplacian --tau 1.5");
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("simulate writes edge list plus sidecar json") {
    write_file("cli_params.json", R"({"K": 2, "s": 3, "p": 1.0, "r": 0.0})");
    CHECK(run_status("simulate --model four --params cli_params.json --seed 5 "
                     "--out cli_sim.edges") == 0);
    std::ifstream edges("cli_sim.edges");
    CHECK(edges.good());
    std::ifstream side("cli_sim.edges.json");
    REQUIRE(side.good());
    std::stringstream ss;
    ss << side.rdbuf();
    CHECK(ss.str().find("\"planted\"") != std::string::npos);
    CHECK(ss.str().find("\"realized_lambda\"") != std::string::npos);
}

TEST_CASE("error paths set exit codes") {
    CHECK(run_status("bogus-subcommand") != 0);
    CHECK(run_status("stats --in does-not-exist.edges") == 1);
    CHECK(run_status("stats") != 0);  // missing required flag
}
