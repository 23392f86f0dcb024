#include <doctest.h>

#include <pcn/cli.hpp>
#include <pcn/families.hpp>
#include <pcn/io.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pcn;
namespace fs = std::filesystem;

namespace
{
    struct Outcome
    {
        int code;
        std::string out;
        std::string err;
    };

    auto pcn_run(std::vector<std::string> args) -> Outcome
    {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    struct TempDir
    {
        fs::path path;

        TempDir()
            : path(fs::temp_directory_path() / ("pcn_cli_test_" + std::to_string(::getpid())))
        {
            fs::create_directories(path);
        }
        ~TempDir() { fs::remove_all(path); }

        auto operator/(const std::string & name) const -> std::string { return (path / name).string(); }
    };
}

TEST_CASE("construct then chi")
{
    TempDir dir;
    auto built = pcn_run({"construct", "fssd(corona(complete:3,path:2),m=1)", "-o", dir / "g.json"});
    CHECK(built.code == 0);
    CHECK(built.out.find("n=27") != std::string::npos);
    auto g = graph_from_json(read_json_file(dir / "g.json"));
    CHECK(g == generate(parse_family_spec("fssd(corona(complete:3,path:2),m=1)")).graph);

    auto chi = pcn_run({"chi", dir / "g.json", "--witness", dir / "w.json"});
    CHECK(chi.code == 0);
    CHECK(chi.out == "chi=6\n");
    auto w = coloring_from_json(read_json_file(dir / "w.json"));
    CHECK(verify(g, w.coloring).valid);

    for (const char * order : {"degree", "ecc", "input"})
        CHECK(pcn_run({"chi", dir / "g.json", "--order", order, "--parallel"}).out == "chi=6\n");

    auto to_stdout = pcn_run({"construct", "cycle:4"});
    CHECK(to_stdout.code == 0);
    CHECK(graph_from_json(nlohmann::json::parse(to_stdout.out)) == cycle_graph(4));
}

TEST_CASE("chi under a tiny budget reports bounds")
{
    TempDir dir;
    std::vector<Edge> edges;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            int v = i * 7 + j;
            if (j < 6)
                edges.push_back({v, v + 1});
            if (i < 6)
                edges.push_back({v, v + 7});
        }
    write_file_atomic(dir / "grid.json", graph_to_json(build_graph(49, edges, std::nullopt, "grid")).dump());
    auto r = pcn_run({"chi", dir / "grid.json", "--time-budget", "0.01"});
    CHECK(r.code == 3);
    CHECK(r.out.rfind("bounds=[", 0) == 0);

    ::setenv("PCN_TIME_BUDGET", "0.01", 1);
    auto env = pcn_run({"chi", dir / "grid.json"});
    CHECK(env.code == 3);
    ::setenv("PCN_TIME_BUDGET", "soon", 1);
    CHECK(pcn_run({"chi", dir / "grid.json"}).code == 64);
    ::unsetenv("PCN_TIME_BUDGET");
}

TEST_CASE("pattern then verify")
{
    TempDir dir;
    auto p = pcn_run({"pattern", "split-complete", "--n", "4", "--m", "1", "-o", dir / "c.json", "--graph-out", dir / "g2.json"});
    CHECK(p.code == 0);
    CHECK(p.out.find("valid=true") != std::string::npos);

    auto v = pcn_run({"verify", dir / "g2.json", dir / "c.json"});
    CHECK(v.code == 0);
    CHECK(v.out == "valid=true\n");

    auto bip = pcn_run({"pattern", "fssd-bipartite", "--base", "cycle:6", "--m", "2", "-o", dir / "b.json", "--graph-out", dir / "bg.json"});
    CHECK(bip.code == 0);
    CHECK(pcn_run({"verify", dir / "bg.json", dir / "b.json"}).code == 0);

    CHECK(pcn_run({"pattern", "cn-corona", "--n", "11", "--p", "3", "--m", "2", "-o", dir / "cn.json"}).code == 0);
    CHECK(pcn_run({"pattern", "fssd-bipartite", "--m", "1"}).code == 64);
    CHECK(pcn_run({"pattern", "fssd-cycle", "--n", "2"}).code == 64);
    CHECK(pcn_run({"pattern", "no-such-pattern", "--n", "4"}).code == 64);
}

TEST_CASE("verify prints violations and exits 2")
{
    TempDir dir;
    write_file_atomic(dir / "c4.json", graph_to_json(cycle_graph(4)).dump());
    write_file_atomic(dir / "bad.json", coloring_to_json("cycle:4", PackingColoring({2, 3, 2, 3})).dump());
    auto r = pcn_run({"verify", dir / "c4.json", dir / "bad.json"});
    CHECK(r.code == 2);
    CHECK(r.out == "valid=false\n0 2 2 2\n1 3 3 2\n");

    write_file_atomic(dir / "short.json", coloring_to_json("cycle:4", PackingColoring({1, 2, 1})).dump());
    CHECK(pcn_run({"verify", dir / "c4.json", dir / "short.json"}).code == 64);
}

TEST_CASE("check writes a report")
{
    TempDir dir;
    auto r = pcn_run({"check", "--suite", "fssd-cycle", "--max-n", "6", "--max-m", "2", "--report", dir / "r.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdicts=pass:8,fail:0,skipped:0") != std::string::npos);
    auto report = read_json_file(dir / "r.json");
    REQUIRE(report.is_array());
    CHECK(report.size() == 8);
    CHECK(report[0]["claim"] == "fssd-cycle");

    CHECK(pcn_run({"check", "--suite", "nonsense", "--report", dir / "x.json"}).code == 64);
    CHECK(pcn_run({"check", "--suite", "fssd-cycle"}).code == 64);
    CHECK_FALSE(fs::exists(dir / "x.json"));
}

TEST_CASE("export-dot")
{
    TempDir dir;
    pcn_run({"construct", "fssd(complete:3,m=1)", "-o", dir / "g.json"});
    write_file_atomic(dir / "c.json", coloring_to_json("", PackingColoring({2, 3, 4, 1, 1, 1})).dump());
    auto r = pcn_run({"export-dot", dir / "g.json", "--coloring", dir / "c.json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("u_{1,2}^1 : 1") != std::string::npos);
    CHECK(pcn_run({"export-dot", dir / "g.json", "-o", dir / "g.dot"}).code == 0);
    CHECK(read_text_file(dir / "g.dot").rfind("graph ", 0) == 0);
}

TEST_CASE("usage and I/O errors")
{
    TempDir dir;
    CHECK(pcn_run({"chi", dir / "missing.json"}).code == 66);
    CHECK(pcn_run({}).code == 64);
    CHECK(pcn_run({"frobnicate"}).code == 64);
    CHECK(pcn_run({"chi"}).code == 64);
    CHECK(pcn_run({"chi", "x.json", "--order", "random"}).code == 64);
    CHECK(pcn_run({"construct", "cycle:2"}).code == 64);
    CHECK(pcn_run({"construct", "cycle:5", "-o", dir / "no/such/dir/g.json"}).code == 66);
    CHECK(pcn_run({"--help"}).code == 0);
    CHECK(pcn_run({"chi", "--help"}).out.find("--time-budget") != std::string::npos);

    std::ofstream(dir / "junk.json") << "{\"n\": -3}";
    CHECK(pcn_run({"chi", dir / "junk.json"}).code == 64);
}

TEST_CASE("outputs are deterministic")
{
    TempDir dir;
    pcn_run({"construct", "fssd(petersen,m=1)", "-o", dir / "p.json"});
    pcn_run({"chi", dir / "p.json", "--witness", dir / "w1.json"});
    pcn_run({"chi", dir / "p.json", "--witness", dir / "w2.json"});
    CHECK(read_text_file(dir / "w1.json") == read_text_file(dir / "w2.json"));
}
