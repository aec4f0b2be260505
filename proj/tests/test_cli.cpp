#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eo/commands.hpp"

using namespace eo;
namespace fs = std::filesystem;

namespace {

const std::string kData = EO_DATA_DIR;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json first_json(const std::string& text) {
    return nlohmann::json::parse(text.substr(0, text.find('\n')));
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("eo_cli_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(CliSolve, TriangleRpo) {
    const CliRun r = invoke({"solve", kData + "/triangle.el", "--algorithm", "rpo"});
    EXPECT_EQ(r.code, 0);
    const auto j = first_json(r.out);
    EXPECT_EQ(j["dstar"], 1);
    EXPECT_EQ(j["instance"], "triangle.el");
}

TEST(CliSolve, TriangleKowalikCheck) {
    const CliRun r = invoke({"solve", kData + "/triangle.el", "--algorithm", "kowalik", "--check"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = first_json(r.out);
    EXPECT_EQ(j["dstar"], 1);
    EXPECT_TRUE(j["certificate"]["present"].get<bool>());
    EXPECT_EQ(j["certificate"]["numerator"], 3);
    EXPECT_EQ(j["certificate"]["denominator"], 3);
}

TEST(CliSolve, MissingFileIsInputError) {
    EXPECT_EQ(invoke({"solve", kData + "/missing.el"}).code, 1);
}

TEST(CliSolve, ParseErrorIsInputError) {
    const fs::path dir = scratch_dir("parse");
    std::ofstream(dir / "bad.el") << "0 1\n1 x\n";
    const CliRun r = invoke({"solve", (dir / "bad.el").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    fs::remove_all(dir);
}

TEST(CliSolve, BadFlagsAreInputErrors) {
    EXPECT_EQ(invoke({"solve", kData + "/triangle.el", "--algorithm", "magic"}).code, 1);
    EXPECT_EQ(invoke({"solve", kData + "/triangle.el", "--eager-layers", "lots"}).code, 1);
    EXPECT_EQ(invoke({"solve", kData + "/triangle.el", "--format", "xml"}).code, 1);
    EXPECT_EQ(invoke({"solve"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
}

TEST(CliSolve, WritesOrientationAndReport) {
    const fs::path dir = scratch_dir("outputs");
    const CliRun r = invoke({"solve", kData + "/k4.el", "--out", (dir / "k4.orient").string(), "--report",
                       (dir / "k4.jsonl").string(), "--eager-layers", "3", "--density-threshold", "0",
                       "--eager-size", "7", "--finisher-threshold", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto report = nlohmann::json::parse(slurp(dir / "k4.jsonl"));
    EXPECT_EQ(report["dstar"], 2);
    EXPECT_EQ(report["config"]["eager_layers"], 3);
    EXPECT_EQ(report["config"]["density_threshold"], 0.0);
    EXPECT_EQ(report["config"]["eager_size"], 7);
    EXPECT_EQ(report["config"]["finisher_threshold"], 4);

    const UndirectedGraph g = load_graph(kData + "/k4.el").graph;
    std::ifstream orient(dir / "k4.orient");
    const Orientation o = read_orientation(orient, g);
    EXPECT_EQ(max_out_degree(o), 2);
    fs::remove_all(dir);
}

TEST(CliSolve, FormatsAndAllAlgorithms) {
    for (const char* file : {"/triangle.el", "/triangle.graph", "/triangle.mtx"}) {
        for (const char* alg : {"rpo", "dfs", "bfs", "kowalik", "naive"}) {
            const CliRun r = invoke({"solve", kData + file, "--algorithm", alg, "--check"});
            EXPECT_EQ(r.code, 0) << file << ' ' << alg << ' ' << r.err;
            EXPECT_EQ(first_json(r.out)["dstar"], 1);
        }
    }
    const CliRun forced = invoke({"solve", kData + "/triangle.graph", "--format", "metis"});
    EXPECT_EQ(forced.code, 0);
}

TEST(CliSolve, OneIndexedEdgeList) {
    const fs::path dir = scratch_dir("one");
    std::ofstream(dir / "p.el") << "1 2\n2 3\n3 1\n";
    const CliRun r = invoke({"solve", (dir / "p.el").string(), "--one-indexed", "--out", (dir / "p.orient").string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(first_json(r.out)["n"], 3);
    const std::string text = slurp(dir / "p.orient");
    EXPECT_EQ(text.find('0'), std::string::npos);  // written back one-indexed
    fs::remove_all(dir);
}

TEST(CliBench, WritesRunAndSummaryLines) {
    const fs::path dir = scratch_dir("bench");
    std::ofstream(dir / "list.txt") << (kData + "/k4.el") << "\n";
    const CliRun r = invoke({"bench", (dir / "list.txt").string(), "--algorithms", "rpo,kowalik", "--repeats", "5",
                       "--report-dir", (dir / "reports").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(dir / "reports" / "bench.jsonl");
    std::string line;
    std::size_t runs = 0, summaries = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        (j["kind"] == "run" ? runs : summaries)++;
    }
    EXPECT_EQ(runs, 10u);
    EXPECT_EQ(summaries, 2u);

    // The bench output feeds the profile command directly.
    const CliRun p = invoke({"profile", (dir / "reports" / "bench.jsonl").string()});
    EXPECT_EQ(p.code, 0) << p.err;
    EXPECT_EQ(p.out.substr(0, p.out.find('\n')), "tau,kowalik,rpo");
    fs::remove_all(dir);
}

TEST(CliBench, BadArguments) {
    EXPECT_EQ(invoke({"bench", kData + "/no_such.list"}).code, 1);
    EXPECT_EQ(invoke({"bench", kData + "/fixtures.list", "--algorithms", "rpo,magic"}).code, 1);
}

TEST(CliProfile, FixtureFractions) {
    const CliRun r = invoke({"profile", kData + "/profile/two_algorithms.jsonl"});
    ASSERT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string header, first, last, line;
    std::getline(in, header);
    std::getline(in, first);
    while (std::getline(in, line)) last = line;
    EXPECT_EQ(header, "tau,A,B");
    EXPECT_EQ(first, "1,1,0");
    EXPECT_EQ(last, "2,1,1");
}

TEST(CliProfile, MismatchIsAnError) {
    const CliRun r = invoke({"profile", kData + "/profile/mismatched.jsonl"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("missing"), std::string::npos);
}

TEST(CliProfile, WritesToFile) {
    const fs::path dir = scratch_dir("profile");
    const CliRun r = invoke({"profile", kData + "/profile/timeout.jsonl", "--out", (dir / "p.csv").string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(slurp(dir / "p.csv").substr(0, 8), "tau,A,B\n");
    fs::remove_all(dir);
}
