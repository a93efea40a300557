#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nbhd/cli.hpp"
#include "nbhd/dimacs.hpp"
#include "oracles.hpp"

using namespace nbhd;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "nbhd");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path workdir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "nbhd_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string file(const std::string& name) { return (workdir() / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("construct writes DIMACS") {
    auto r = run({"construct", "complete", "--p", "4", "-o", file("k4.col")});
    CHECK(r.code == kExitOk);
    Graph g = read_graph(file("k4.col"));
    CHECK(g.order() == 4);
    CHECK(g.size() == 6);

    r = run({"construct", "cycle", "--n", "5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("p edge 5 5") != std::string::npos);
}

TEST_CASE("construct round trip for every family") {
    const std::vector<std::pair<std::vector<std::string>, Graph>> cases = {
        {{"complete", "--p", "5"}, complete_graph(5)},
        {{"bipartite", "--l", "2", "--m", "4"}, complete_bipartite(2, 4)},
        {{"cycle", "--n", "7"}, cycle_graph(7)},
        {{"kneser", "--n", "6", "--k", "2"}, kneser_graph(6, 2)},
        {{"trianglefree", "--q", "4"}, triangle_free_chromatic(4)},
        {{"corollary", "--l", "2", "--m", "3", "--p", "3", "--q", "4"}, build_corollary_graph({2, 3, 3, 4}).graph},
    };
    for (const auto& [args, expected] : cases) {
        std::vector<std::string> full{"construct"};
        full.insert(full.end(), args.begin(), args.end());
        full.insert(full.end(), {"-o", file("rt.col")});
        REQUIRE(run(full).code == kExitOk);
        CHECK_MESSAGE(read_graph(file("rt.col")) == expected, args[0]);
    }

    REQUIRE(run({"construct", "cycle", "--n", "5", "-o", file("c5.col")}).code == kExitOk);
    REQUIRE(run({"construct", "mycielski", file("c5.col"), "-o", file("m.col")}).code == kExitOk);
    CHECK(read_graph(file("m.col")) == mycielskian(cycle_graph(5)));
    REQUIRE(run({"construct", "complete", "--p", "3", "-o", file("k3.col")}).code == kExitOk);
    REQUIRE(run({"construct", "gadget", "--h", file("k3.col"), "--x", "1", "--k", file("c5.col"), "--y", "2", "-o",
                 file("g.col")})
                .code == kExitOk);
    CHECK(read_graph(file("g.col")) == build_gadget({complete_graph(3), 1, cycle_graph(5), 2}).graph);
}

TEST_CASE("complex and homology subcommands") {
    REQUIRE(run({"construct", "cycle", "--n", "4", "-o", file("c4.col")}).code == kExitOk);
    REQUIRE(run({"ncomplex", file("c4.col"), "-o", file("n_c4.facets")}).code == kExitOk);
    CHECK(slurp(file("n_c4.facets")) == "# vertices 4\n0 2\n1 3\n");

    auto r = run({"homology", "--complex", file("n_c4.facets"), "--max-dim", "1", "--json", file("h.json")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("H~0 = Z  (betti 1)") != std::string::npos);
    auto j = nlohmann::json::parse(slurp(file("h.json")));
    CHECK(j["homology"][0]["betti"] == 1);
    CHECK(j["homology"][1]["betti"] == 0);
}

TEST_CASE("invariant subcommands") {
    REQUIRE(run({"construct", "kneser", "--n", "5", "--k", "2", "-o", file("petersen.col")}).code == kExitOk);
    CHECK(run({"chromatic", file("petersen.col")}).out.rfind("chi=3", 0) == 0);
    CHECK(run({"clique", file("petersen.col")}).out.rfind("omega=2", 0) == 0);

    auto r = run({"--format", "json", "bounds", file("petersen.col")});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["chi"] == 3);
    CHECK(j["lovasz"]["value"] == 3);
    CHECK(j["homology"][1]["betti"] == 11);
}

TEST_CASE("verify subcommands") {
    auto r = run({"verify", "corollary", "--l", "2", "--m", "3", "--p", "3", "--q", "4", "--json", file("cor.json")});
    CHECK(r.code == kExitOk);
    auto j = nlohmann::json::parse(slurp(file("cor.json")));
    CHECK(j["pass"] == true);
    CHECK(j["chi"] == 4);
    CHECK(j["omega"] == 3);

    REQUIRE(run({"construct", "complete", "--p", "3", "-o", file("k3.col")}).code == kExitOk);
    REQUIRE(run({"construct", "complete", "--p", "4", "-o", file("k4.col")}).code == kExitOk);
    r = run({"verify", "theorem2", "--h", file("k4.col"), "--x", "0", "--k", file("k3.col"), "--y", "2", "--max-dim",
             "3"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("suite output is reproducible") {
    auto a = run({"verify", "suite", "--seed", "0", "--json", file("s1.json")});
    auto b = run({"verify", "suite", "--seed", "0", "--jobs", "2", "--json", file("s2.json")});
    CHECK(a.code == kExitOk);
    CHECK(b.code == kExitOk);
    CHECK(slurp(file("s1.json")) == slurp(file("s2.json")));
    auto j = nlohmann::json::parse(slurp(file("s1.json")));
    CHECK(j["cases"].size() == 24);
}

TEST_CASE("exit codes and error prefixes") {
    auto r = run({"construct", "kneser", "--n", "3", "--k", "2"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.rfind("error:parameter:", 0) == 0);

    r = run({"frobnicate"});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.rfind("error:usage:", 0) == 0);

    r = run({"chromatic", file("missing.col")});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.rfind("error:parse:", 0) == 0);

    {
        std::ofstream bad(file("bad.col"));
        bad << "p edge 3 1\ne 1 4\n";
    }
    r = run({"chromatic", file("bad.col")});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.rfind("error:parse:", 0) == 0);

    REQUIRE(run({"construct", "cycle", "--n", "4", "-o", file("c4.col")}).code == kExitOk);
    REQUIRE(run({"construct", "complete", "--p", "3", "-o", file("k3.col")}).code == kExitOk);
    r = run({"verify", "theorem2", "--h", file("c4.col"), "--k", file("k3.col")});
    CHECK(r.code == kExitUsage);
    CHECK(r.err.rfind("error:precondition:", 0) == 0);

    REQUIRE(run({"construct", "complete", "--p", "12", "-o", file("k12.col")}).code == kExitOk);
    r = run({"--limit", "100", "bounds", file("k12.col")});
    CHECK(r.code == kExitBudget);
    CHECK(r.err.rfind("error:budget:", 0) == 0);

    r = run({"verify", "corollary", "--l", "1", "--m", "1", "--p", "2", "--q", "2"});
    CHECK(r.code == kExitUsage);

    {
        std::ofstream dup(file("dup.col"));
        dup << "p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n";
    }
    r = run({"clique", file("dup.col")});
    CHECK(r.code == kExitOk);
    CHECK(r.err.find("warning:dimacs:") != std::string::npos);

    CHECK(run({"--help"}).code == kExitOk);
}
