#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "psombor/json_io.hpp"

using namespace psombor;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / "psombor_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const auto path = scratch_dir() / name;
    std::ofstream(path) << text;
    return path.string();
}

// Runs the installed binary through the shell and returns its exit status.
int run_binary(const std::string& args, std::string* output = nullptr) {
    const std::string cmd = std::string(PSOMBOR_BIN) + " " + args + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
    const int status = ::pclose(pipe);
    if (output) *output = text;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("argument helpers") {
    CHECK(cli::parse_p_list("1,2,3") == std::vector<double>{1, 2, 3});
    CHECK(cli::parse_p_list("-1, 0.5") == std::vector<double>{-1, 0.5});
    CHECK_THROWS_AS(cli::parse_p_list("0"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_p_list("1,,2"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_p_list("two"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_p_list("inf"), cli::UsageError);
    CHECK(cli::parse_range("4..9") == std::pair<std::size_t, std::size_t>{4, 9});
    CHECK(cli::parse_range("8") == std::pair<std::size_t, std::size_t>{8, 8});
    CHECK_THROWS_AS(cli::parse_range("9..4"), cli::UsageError);
    CHECK_THROWS_AS(cli::parse_range("a..4"), cli::UsageError);
    CHECK(cli::parse_format("csv") == cli::Format::csv);
    CHECK_FALSE(cli::parse_format("xml").has_value());
}

TEST_CASE("spectrum of P4") {
    const auto path = write_file("p4.edges", "0 1\n1 2\n2 3\n");
    const auto r = run_cli({"spectrum", "--input", path, "--p", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "spectrum");
    const auto values = j["results"][0]["spectrum"]["eigenvalues"].get<std::vector<double>>();
    const std::vector<double> want{4.059965, 1.231538, -1.231538, -4.059965};
    REQUIRE(values.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(values[i] == doctest::Approx(want[i]).epsilon(1e-6));
    CHECK(j["results"][0]["matrix"][0][1].get<double>() == doctest::Approx(std::sqrt(5.0)));

    const auto table = run_cli({"spectrum", "--input", path, "--format", "table"});
    CHECK(table.out.find("4.059965 1.231538 -1.231538 -4.059965") != std::string::npos);

    const auto csv = run_cli({"spectrum", "--input", path, "--p", "1,2", "--matrix", "laplacian", "--format", "csv"});
    CHECK(csv.out.rfind("p,matrix,k,eigenvalue\n", 0) == 0);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 9);

    const auto json_graph = write_file("k3.json", R"({"n": 3, "edges": [[0, 1], [1, 2], [0, 2]]})");
    const auto k3 = Json::parse(run_cli({"spectrum", "--input", json_graph, "--vectors"}).out);
    CHECK(k3["results"][0]["spectrum"]["eigenvalues"][0].get<double>() == doctest::Approx(4.0 * std::sqrt(2.0)));
    CHECK(k3["results"][0]["spectrum"].contains("eigenvectors"));
}

TEST_CASE("verify over all trees") {
    const auto r = run_cli({"verify", "--corpus", "trees", "--n", "4..9", "--p", "1,2,3", "--seed", "42"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["suite"]["graphs"] == 92);
    CHECK(j["suite"]["violations"].empty());
    CHECK(j["suite"]["ok"] == true);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "--corpus", "random", "--count", "25", "--p", "-1,2", "--seed", "7"};
    const auto a = run_cli(args);
    auto with_jobs = args;
    with_jobs.insert(with_jobs.end(), {"--jobs", "4"});
    const auto b = run_cli(with_jobs);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == run_cli(args).out);
}

TEST_CASE("hard violations exit with 2") {
    const auto r = run_cli({"verify", "--corpus", "families", "--n", "4", "--tol=-1e-3", "--format", "table"});
    CHECK(r.code == 2);
    CHECK(r.out.find("FAILED") != std::string::npos);
}

TEST_CASE("usage and IO errors exit with 1") {
    const auto unknown = run_cli({"spectrum", "--input", "x.edges", "--bogus"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({"spectrum", "--input", "/nonexistent.edges"}).code == 1);
    const auto path = write_file("p3.edges", "0 1\n1 2\n");
    CHECK(run_cli({"spectrum", "--input", path, "--p", "0"}).code == 1);
    CHECK(run_cli({"spectrum", "--input", path, "--format", "xml"}).code == 1);
    CHECK(run_cli({"spectrum", "--input", write_file("bad.edges", "0 0\n")}).code == 1);
    CHECK(run_cli({"verify", "--corpus", "nonsense"}).code == 1);
    CHECK(run_cli({"verify", "--dir", "/nonexistent/dir"}).code == 1);
    CHECK(run_cli({"trees", "--n", "13"}).code == 1);
    CHECK(run_cli({"regress", "--table", "benzenoids", "--x", "SE", "--y", "nope"}).code == 1);
    CHECK(run_cli({"regress", "--x", "SE", "--y", "BP"}).code == 1);
    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("spectrum") != std::string::npos);
}

TEST_CASE("trees subcommand") {
    const Json j = Json::parse(run_cli({"trees", "--n", "8", "--max-degree", "4"}).out);
    CHECK(j["catalogs"][0]["count"] == 18);
    CHECK(j["catalogs"][0]["max_degree"] == 4);

    const auto verify = run_cli({"trees", "--n", "4..7", "--verify", "--shift", "3", "--p", "1,2,3"});
    CHECK(verify.code == 0);
    const Json v = Json::parse(verify.out);
    CHECK(v["extremes"].size() == 12);
    CHECK(v["shifts"].size() == 36);
    CHECK(v["ok"] == true);

    const auto archive = scratch_dir() / "archive";
    fs::remove_all(archive);
    CHECK(run_cli({"trees", "--n", "6", "--archive", archive.string(), "--format", "csv"}).code == 0);
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(archive)) {
        ++files;
        CHECK(read_graph_file(entry.path().string()).size() == 5);
    }
    CHECK(files == 6);
}

TEST_CASE("regress and reproduce") {
    const auto r = run_cli({"regress", "--table", "benzenoids", "--x", "SE", "--y", "BP", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("x,y,slope,intercept,pearson_r,samples\nSE,BP,4.658", 0) == 0);

    const auto scatter = scratch_dir() / "scatter.csv";
    const auto csv_path = write_file("mini.csv", "id,xi1,BP\n1,0,0\n2,1,1\n3,2,3\n");
    const auto mini = run_cli({"regress", "--data", csv_path, "--x", "xi1", "--y", "BP", "--scatter", scatter.string()});
    CHECK(Json::parse(mini.out)["fit"]["slope"].get<double>() == doctest::Approx(1.5));
    CHECK(fs::exists(scatter));

    const auto rep = run_cli({"reproduce", "--format", "table"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("| BP ~ SE | 4.658 | 4.658100 |") != std::string::npos);
    const Json j = Json::parse(run_cli({"reproduce"}).out);
    CHECK(j["fits"].size() == 10);
    CHECK(j["fits_within_tolerance"] == true);
}

TEST_CASE("out file mirrors stdout") {
    const auto out_path = (scratch_dir() / "out.json").string();
    const auto path = write_file("c4.edges", "n=4\n0 1\n1 2\n2 3\n3 0\n");
    const auto r = run_cli({"spectrum", "--input", path, "--out", out_path});
    std::ifstream in(out_path);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == r.out);
}

TEST_CASE("binary exit codes") {
    const auto path = write_file("p4b.edges", "0 1\n1 2\n2 3\n");
    std::string text;
    CHECK(run_binary("spectrum --input " + path + " --format table", &text) == 0);
    CHECK(text.find("4.059965") != std::string::npos);
    CHECK(run_binary("verify --corpus trees --n 4..6 --p 1,2,3 --seed 42") == 0);
    CHECK(run_binary("verify --corpus families --n 4 --tol=-1e-3") == 2);
    CHECK(run_binary("spectrum --unknown-flag", &text) == 1);
    CHECK(text.find("Usage") != std::string::npos);
    CHECK(run_binary("spectrum --input - --format csv < " + path, &text) == 0);
    CHECK(run_binary("reproduce --format table", &text) == 0);
    CHECK(text.find("4.658") != std::string::npos);
    auto with_env = [](const std::string& env, const std::string& args) {
        const int status = std::system((env + " " + PSOMBOR_BIN + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    CHECK(with_env("PSOMBOR_TOL=abc", "verify --corpus trees --n 4") == 1);
    CHECK(with_env("PSOMBOR_TOL=-1e-3", "verify --corpus families --n 4") == 2);
    CHECK(with_env("PSOMBOR_TOL=1e-6", "verify --corpus families --n 4") == 0);
}
