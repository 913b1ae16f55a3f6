#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(GROUPWIDTH_CLI) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Workdir {
public:
    Workdir() : path_(fs::temp_directory_path() / ("groupwidth_cli_" + std::to_string(::getpid()))) { fs::create_directories(path_); }
    ~Workdir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

}  // namespace

TEST_CASE("generate writes SCX files and prints a summary")
{
    Workdir dir;
    const auto r = run("generate torus --dim 2 --res 4 --out " + dir.file("t2.scx"));
    CHECK(r.code == 0);
    const auto summary = json::parse(r.out);
    CHECK(summary["vertices"] == 16);
    CHECK(summary["betti1_Q"] == 2);
    CHECK(summary["euler_characteristic"] == 0);
    std::ifstream in(dir.file("t2.scx"));
    const auto doc = json::parse(in);
    CHECK(doc["vertex_count"] == 16);
    CHECK(doc["format"] == "scx-1");

    const auto moore = run("generate presentation --gens 1 --relator aaa --out " + dir.file("m.scx"));
    CHECK(moore.code == 0);
    CHECK(json::parse(moore.out)["betti1_Q"] == 0);
}

TEST_CASE("bad generator parameters exit with 2")
{
    CHECK(run("generate circle --m 2").code == 2);
    CHECK(run("generate torus --dim 2 --res 2").code == 2);
    CHECK(run("generate presentation --gens 1 --relator abc").code == 2);
    CHECK(run("generate sphere").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("analyze /nonexistent.scx").code == 2);
}

TEST_CASE("analyze")
{
    Workdir dir;
    REQUIRE(run("generate torus --dim 2 --res 4 --out " + dir.file("t2.scx")).code == 0);
    REQUIRE(run("generate circle --m 6 --out " + dir.file("hex.scx")).code == 0);

    const auto t = run("analyze " + dir.file("t2.scx") + " --labels tent --field Q");
    CHECK(t.code == 0);
    const auto report = json::parse(t.out);
    CHECK(report["max_rank"] == 1);
    CHECK(report["qf"]["class"] == "circle");

    CHECK(json::parse(run("analyze " + dir.file("hex.scx") + " --labels tent").out)["max_rank"] == 0);
    CHECK(json::parse(run("analyze " + dir.file("t2.scx") + " --labels constant").out)["max_rank"] == 2);
    CHECK(json::parse(run("analyze " + dir.file("t2.scx") + " --labels constant --field F3").out)["field"] == "Fp:3");

    // no labels in the file
    CHECK(run("analyze " + dir.file("t2.scx")).code == 2);
    CHECK(run("analyze " + dir.file("t2.scx") + " --field F4 --labels tent").code == 2);

    std::ofstream(dir.file("bad.scx")) << R"({"format":"scx-1","vertex_count":3,"maximal_simplices":[[0,1],[1,2],[0,2]],"labels":[0,1,2]})";
    CHECK(run("analyze " + dir.file("bad.scx")).code == 2);

    CHECK(run("analyze " + dir.file("t2.scx") + " --labels tent --out " + dir.file("r.json")).code == 0);
    std::ifstream in(dir.file("r.json"));
    CHECK(json::parse(in)["max_rank"] == 1);
}

TEST_CASE("search and analyze agree")
{
    Workdir dir;
    REQUIRE(run("generate torus --dim 2 --res 4 --out " + dir.file("t2.scx")).code == 0);
    REQUIRE(run("generate circle --m 3 --out " + dir.file("tri.scx")).code == 0);
    REQUIRE(run("generate torus --dim 2 --res 3 --out " + dir.file("t33.scx")).code == 0);

    const auto a = run("search " + dir.file("t2.scx") + " --mode anneal --seed 7 --out " + dir.file("cert.json"));
    CHECK(a.code == 0);
    std::ifstream in(dir.file("cert.json"));
    const auto result = json::parse(in);
    CHECK(result["best_value"] == 1);

    // feed the certificate back in as the file's labels
    std::ifstream src(dir.file("t2.scx"));
    auto doc = json::parse(src);
    doc["labels"] = result["labels"];
    std::ofstream(dir.file("t2_cert.scx")) << doc.dump();
    CHECK(json::parse(run("analyze " + dir.file("t2_cert.scx")).out)["max_rank"] == result["best_value"]);

    const auto tri = json::parse(run("search " + dir.file("tri.scx") + " --mode exhaustive").out);
    CHECK(tri["best_value"] == 1);
    CHECK(tri["exhaustive"] == true);

    const auto t33 = json::parse(run("search " + dir.file("t33.scx")).out);
    CHECK(t33["exhaustive"] == true);
    CHECK(t33["best_value"] == 2);

    CHECK(run("search " + dir.file("t2.scx") + " --mode anneal --steps 0").code == 2);
    CHECK(run("search " + dir.file("t2.scx") + " --mode greedy").code == 2);
}

TEST_CASE("composite generators")
{
    Workdir dir;
    REQUIRE(run("generate torus --dim 2 --res 4 --out " + dir.file("t2.scx")).code == 0);
    REQUIRE(run("generate circle --m 6 --out " + dir.file("hex.scx")).code == 0);

    const auto sw = run("generate spread-wedge --inputs " + dir.file("t2.scx") + " " + dir.file("hex.scx") + " --out " + dir.file("sw.scx"));
    CHECK(sw.code == 0);
    CHECK(json::parse(sw.out)["betti1_Q"] == 3);
    CHECK(json::parse(run("analyze " + dir.file("sw.scx")).out)["max_rank"] == 1);

    const auto w = run("generate wedge --inputs " + dir.file("hex.scx") + " " + dir.file("hex.scx") + " --at 0 3");
    CHECK(w.code == 0);
    CHECK(json::parse(w.out)["vertex_count"] == 11);

    const auto p = run("generate product --inputs " + dir.file("hex.scx") + " " + dir.file("hex.scx") + " --out " + dir.file("p.scx"));
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["betti1_Q"] == 2);
    CHECK(json::parse(run("analyze " + dir.file("p.scx") + " --labels tent").out)["max_rank"] == 1);

    CHECK(run("generate spread-wedge --inputs " + dir.file("t2.scx")).code == 2);
}

TEST_CASE("verify")
{
    const auto one = run("verify --case torus-k2");
    CHECK(one.code == 0);
    const auto j = json::parse(one.out);
    CHECK(j["passed"] == 1);
    CHECK(j["cases"][0]["status"] == "pass");

    CHECK(run("verify --case free-width-zero").code == 0);
    CHECK(run("verify --case moore-f3").code == 0);
    CHECK(run("verify --case nothing-matches").code == 2);

    const auto all = json::parse(run("verify").out);
    CHECK(all["failed"] == 0);
    CHECK(all["passed"] == 10);
}
