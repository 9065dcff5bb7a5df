#include "fixtures.hpp"

#include "commands.hpp"

#include "eideal/cm_recognition.hpp"
#include "eideal/graph.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using eideal::cli::run;
using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "eideal");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return fixture_path(name).string(); }

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("eideal_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze a path with the oracle") {
    const Result r = cli({"analyze", fx("path4.graph"), "--oracle", "--json"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["vertices"] == 4);
    CHECK(j["edges"] == 3);
    CHECK(j["bipartite"] == true);
    CHECK(j["cm"] == true);
    CHECK(j["formula"]["depth"] == 2);
    CHECK(j["formula"]["reg"] == 1);
    CHECK(j["oracle"]["depth"] == 2);
    CHECK(j["oracle"]["reg"] == 1);
    CHECK(j["oracle"]["betti"].is_null());
    for (const char* key : {"alpha", "beta", "theta", "gamma", "indep", "cover"}) CHECK(j["invariants"].contains(key));
    CHECK(j["warnings"].empty());
}

TEST_CASE("JSON keys appear in the documented order") {
    const Json j = cli({"analyze", fx("path4.graph"), "--json"}).json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"vertices", "edges", "bipartite", "cm", "labeling", "invariants", "formula",
                                           "oracle", "warnings"});
    CHECK(j["oracle"].is_null());
}

TEST_CASE("analyze a 4-cycle") {
    const Result r = cli({"analyze", fx("c4.graph"), "--json", "--oracle"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["cm"] == false);
    CHECK(j["bipartite"] == true);
    CHECK(j["formula"].is_null());
    CHECK(j["oracle"]["depth"] == 1);
    CHECK(j["oracle"]["dim"] == 2);
}

TEST_CASE("analyze the fig4 right operand with Betti numbers") {
    const Result r = cli({"analyze", fx("fig4_g2.graph"), "--betti", "--json"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["cm"] == true);
    CHECK(j["oracle"]["depth"] == 3);
    CHECK(j["oracle"]["reg"] == 2);
    CHECK(j["labeling"]["relation"] == Json::parse("[[1,1],[1,3],[2,2],[2,3],[3,3]]"));
    const Json betti = j["oracle"]["betti"];
    REQUIRE(betti.is_array());
    CHECK(betti == Json::parse("[[0,0,1],[1,2,5],[2,3,5],[2,4,1],[3,4,1],[3,5,1]]"));
}

TEST_CASE("human-readable analyze output") {
    const Result r = cli({"analyze", fx("fig4_g2.graph"), "--oracle"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("cohen-macaulay  yes") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("input errors exit 1") {
    CHECK(cli({"analyze", "/nonexistent/file.graph"}).code == 1);
    const fs::path dir = scratch_dir("bad");
    fs::create_directories(dir);
    {
        std::ofstream(dir / "loop.graph") << "v a\ne a a\n";
    }
    const Result r = cli({"analyze", (dir / "loop.graph").string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(cli({"analyze"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"verify", "--theorem", "lemma"}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("help exits 0") {
    const Result r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("analyze") != std::string::npos);
}

TEST_CASE("oracle cap from flag and environment") {
    const fs::path dir = scratch_dir("cap");
    fs::create_directories(dir);
    eideal::write_graph_file(dir / "p18.graph", eideal::path_graph(18));
    const std::string file = (dir / "p18.graph").string();
    CHECK(cli({"analyze", file, "--oracle"}).code == 1);
    CHECK(cli({"analyze", file, "--oracle", "--max-vertices", "4"}).code == 1);
    ::setenv("EIDEAL_MAX_VERTICES", "4", 1);
    const Result small = cli({"analyze", fx("path4.graph"), "--oracle", "--json"});
    CHECK(small.code == 0);
    CHECK(cli({"analyze", fx("fig4_g2.graph"), "--oracle"}).code == 1);
    CHECK(cli({"analyze", fx("fig4_g2.graph"), "--oracle", "--max-vertices", "6"}).code == 0);
    ::setenv("EIDEAL_MAX_VERTICES", "many", 1);
    CHECK(cli({"analyze", fx("path4.graph"), "--oracle"}).code == 1);
    ::unsetenv("EIDEAL_MAX_VERTICES");
    fs::remove_all(dir);
}

TEST_CASE("compose circ reproduces fig3") {
    const Result r = cli({"compose", "--op", "circ", "--g1", fx("fig3_g1.graph"), "--u1", "u1", "--g2", fx("p2.graph"),
                          "--u2", "u2", "--json", "--oracle"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["vertices"] == 5);
    CHECK(j["formula"]["depth"] == 3);
    CHECK(j["oracle"]["depth"] == 3);
    CHECK(j["warnings"] == Json::parse(R"(["support_degree_one","operand_is_p2"])"));
    const eideal::Graph g = eideal::parse_graph(j["graph"].get<std::string>());
    CHECK(g.contains("g1.x11"));
    CHECK(g.contains("v"));
}

TEST_CASE("compose circ reproduces fig4") {
    const Result r = cli({"compose", "--op", "circ", "--g1", fx("fig4_g1.graph"), "--u1", "u1", "--g2",
                          fx("fig4_g2.graph"), "--u2", "u2", "--json", "--oracle"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["vertices"] == 7);
    CHECK(j["formula"]["depth"] == 3);
    CHECK(j["oracle"]["depth"] == 3);
}

TEST_CASE("compose star of two P4 writes P7") {
    const fs::path dir = scratch_dir("star");
    const fs::path file = dir / "p7.graph";
    fs::create_directories(dir);
    const Result r = cli({"compose", "--op", "star", "--g1", fx("path4.graph"), "--u1", "d", "--g2", fx("path4b.graph"),
                          "--u2", "a2", "-o", file.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# predicted depth 3, reg 2 [star]") != std::string::npos);
    const eideal::Graph g = eideal::read_graph_file(file);
    CHECK(g.order() == 7);
    CHECK(eideal::is_path(g));
    fs::remove_all(dir);
}

TEST_CASE("compose pendant on the fig4 right operand") {
    const Result r = cli({"compose", "--op", "pendant", "--g1", fx("fig4_g2.graph"), "--u1", "u2", "--json", "--oracle"});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["vertices"] == 7);
    CHECK(j["formula"]["depth"] == 3);
    CHECK(j["formula"]["reg"].is_null());
    CHECK(j["oracle"]["depth"] == 3);
}

TEST_CASE("compose precondition failures exit 1") {
    const Result not_leaf = cli({"compose", "--op", "circ", "--g1", fx("fig4_g2.graph"), "--u1", "v2", "--g2",
                                 fx("p2.graph"), "--u2", "u2"});
    CHECK(not_leaf.code == 1);
    CHECK(not_leaf.err.find("leaf") != std::string::npos);
    const Result not_cm = cli({"compose", "--op", "star", "--g1", fx("c4.graph"), "--u1", "a", "--g2", fx("p2.graph"),
                               "--u2", "u2"});
    CHECK(not_cm.code == 1);
    CHECK(cli({"compose", "--op", "circ", "--g1", fx("p2.graph"), "--u1", "u2"}).code == 1);
}

TEST_CASE("generate writes a deterministic corpus") {
    const fs::path dir = scratch_dir("gen");
    Result r = cli({"generate", "--pairs", "4", "--density", "0.5", "--seed", "7", "--count", "20", "-o", dir.string(),
                    "--json"});
    REQUIRE(r.code == 0);
    const Json files = r.json()["files"];
    REQUIRE(files.size() == 20);
    CHECK(fs::path(files[0].get<std::string>()).filename() == "cm_4_7_0.graph");
    std::vector<std::string> args{"check-cm"};
    for (const auto& f : files) args.push_back(f.get<std::string>());
    CHECK(cli(args).code == 0);

    const std::string first = eideal::serialize_graph(eideal::read_graph_file(files[0].get<std::string>()));
    r = cli({"generate", "--pairs", "4", "--density", "0.5", "--seed", "7", "--count", "1", "-o", dir.string()});
    CHECK(r.code == 0);
    CHECK(eideal::serialize_graph(eideal::read_graph_file(files[0].get<std::string>())) == first);
    fs::remove_all(dir);
}

TEST_CASE("generate trivial shapes") {
    const fs::path dir = scratch_dir("gen_small");
    REQUIRE(cli({"generate", "--pairs", "1", "--count", "1", "-o", dir.string()}).code == 0);
    CHECK(eideal::read_graph_file(dir / "cm_1_1_0.graph").size() == 1);
    REQUIRE(cli({"generate", "--pairs", "3", "--density", "0", "--count", "1", "-o", dir.string()}).code == 0);
    const eideal::Graph g = eideal::read_graph_file(dir / "cm_3_1_0.graph");
    CHECK(g.order() == 6);
    CHECK(g.size() == 3);
    CHECK(cli({"generate", "--pairs", "0", "-o", dir.string()}).code == 1);
    CHECK(cli({"generate", "--density", "1.5", "-o", dir.string()}).code == 1);
    fs::remove_all(dir);
}

TEST_CASE("check-cm exit codes") {
    CHECK(cli({"check-cm", fx("fig4_g2.graph"), fx("path4.graph")}).code == 0);
    const Result r = cli({"check-cm", fx("fig4_g2.graph"), fx("c4.graph"), "--json"});
    CHECK(r.code == 3);
    const Json j = r.json();
    CHECK(j[0]["cm"] == true);
    CHECK(j[1]["cm"] == false);
    CHECK(j[1]["reason"] == eideal::to_string(eideal::CMRejection::no_poset_matching));
}

TEST_CASE("verify is byte-identical across runs") {
    const std::vector<std::string> args{"verify", "--theorem", "circ", "--trials", "10", "--max-pairs", "3",
                                        "--seed", "5", "--json"};
    const Result a = cli(args);
    const Result b = cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json j = a.json();
    CHECK(j["theorem"] == "circ");
    CHECK(j["passed"] == 10);
    CHECK(j["failed"] == 0);
    CHECK(j["first_counterexample"].is_null());
}

TEST_CASE("verify every theorem briefly") {
    for (const char* t : {"cm-values", "leaf", "circ", "star", "pendant"}) {
        const Result r = cli({"verify", "--theorem", t, "--trials", "5", "--seed", "3"});
        CAPTURE(t);
        CHECK(r.code == 0);
        CHECK(r.out.find("5/5 passed") != std::string::npos);
    }
}

}
