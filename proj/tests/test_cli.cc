#include <corelab/cli.hh>
#include <corelab/graph_io.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace corelab;

namespace
{
    struct Run
    {
        int code;
        std::string out;
        std::string err;
    };

    auto run(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return { code, out.str(), err.str() };
    }

    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("corelab_test_" + name)).string();
    }

    auto slurp(const std::string & path) -> std::string
    {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto spit(const std::string & path, const std::string & text) -> void
    {
        std::ofstream(path, std::ios::binary) << text;
    }
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run({ }).code == exit_usage);
    CHECK(run({ "verify", "--no-such-flag" }).code == exit_usage);
    CHECK(run({ "frobnicate" }).code == exit_usage);
    CHECK(run({ "verify" }).code == exit_usage);
    CHECK(run({ "verify", "--input", "/nonexistent/graph.g6" }).code == exit_usage);
    CHECK(run({ "verify", "--fixture", "fig9" }).code == exit_usage);
    CHECK(run({ "verify", "--fixture", "fig1", "--statements", "NOPE" }).code == exit_usage);
    CHECK(run({ "search", "nonsense" }).code == exit_usage);
    CHECK(run({ "campaign", "--count", "0" }).code == exit_usage);
    CHECK(run({ "--help" }).code == exit_ok);
}

TEST_CASE("corrupt graph6 input is a usage error")
{
    auto path = temp_path("corrupt.g6");
    spit(path, "D?\n");
    auto r = run({ "verify", "--input", path });
    CHECK(r.code == exit_usage);
    CHECK(r.err.find("at byte 2") != std::string::npos);
}

TEST_CASE("verify on a single vertex")
{
    auto path = temp_path("k1.g6");
    auto report = temp_path("k1.json");
    spit(path, "@\n");
    auto r = run({ "verify", "--input", path, "--report", report, "--reproducible" });
    CHECK(r.code == exit_ok);
    auto j = json::parse(slurp(report));
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["graphs"] == 1);
    CHECK(j["summary"]["wall_time_seconds"] == 0.0);
    CHECK(j["results"][0]["n"] == 1);
    CHECK(revalidate_run_report(j).empty());
}

TEST_CASE("verify with a supplied set and collection")
{
    auto report = temp_path("fig1.json");
    auto r = run({ "verify", "--fixture", "fig1", "--set", "v1,v4,v7", "--collection",
            "v1,v2,v3,v6,v8,v10,v12;v1,v2,v4,v6,v7,v10,v13", "--statements", "ML_i,SCL", "--report", report });
    CHECK(r.code == exit_ok);
    auto j = json::parse(slurp(report));
    bool found = false;
    for (auto & c : j["results"][0]["checks"])
        if (c["statement"] == "SCL" && c["lhs"] == 10 && c["rhs"] == 11)
            found = true;
    CHECK(found);
    CHECK(revalidate_run_report(j).empty());

    // outside the hypotheses the graph is reported as an error
    auto bad = run({ "verify", "--fixture", "fig1", "--collection", "v2,v3,v7;v1,v2,v4,v6,v7,v10,v12" });
    CHECK(bad.code == exit_failure);
}

TEST_CASE("edge list input")
{
    auto path = temp_path("c5.txt");
    spit(path, "c five-cycle\nn 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    auto r = run({ "verify", "--input", path, "--format", "edgelist", "--exhaustive" });
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("failed: 0") != std::string::npos);
}

TEST_CASE("campaign reports are byte-identical across runs and thread counts")
{
    auto a = temp_path("campaign_a.json"), b = temp_path("campaign_b.json");
    std::vector<std::string> args{ "campaign", "--n-min", "4", "--n-max", "7", "--p", "0.3,0.6", "--count", "6",
        "--seed", "11", "--reproducible", "--full" };
    auto first = args, second = args;
    first.insert(first.end(), { "--report", a, "--threads", "1" });
    second.insert(second.end(), { "--report", b, "--threads", "4" });
    CHECK(run(first).code == exit_ok);
    CHECK(run(second).code == exit_ok);
    auto text = slurp(a);
    CHECK(! text.empty());
    CHECK(text == slurp(b));

    auto j = json::parse(text);
    CHECK(j["summary"]["graphs"] == 4 * 2 * 6);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["spec"]["seed"] == 11);
    CHECK(revalidate_run_report(j).empty());
}

TEST_CASE("campaign seed changes the graphs")
{
    CampaignSpec spec;
    spec.n_min = spec.n_max = 8;
    spec.p_list = { 0.5 };
    spec.count_per_cell = 3;
    spec.threads = 1;
    auto one = run_campaign(spec).to_json(0, true);
    spec.seed = 8;
    auto two = run_campaign(spec).to_json(0, true);
    CHECK(one["results"][0]["graph6"] != two["results"][0]["graph6"]);
}

TEST_CASE("revalidation flags a tampered verdict")
{
    auto report = temp_path("tamper.json");
    REQUIRE(run({ "verify", "--fixture", "fig3-g1", "--report", report }).code == exit_ok);
    auto j = json::parse(slurp(report));
    REQUIRE(revalidate_run_report(j).empty());
    for (auto & c : j["results"][0]["checks"])
        if (c["statement"] == "COR2_core_corona")
            c["verdict"] = "failed";
    CHECK_FALSE(revalidate_run_report(j).empty());
}

TEST_CASE("example replay negative control")
{
    auto control = run({ "paper-examples", "--perturb-fig1" });
    CHECK(control.code == exit_failure);
    CHECK(control.out.find("[FAIL]") != std::string::npos);
    CHECK(control.out.find("expected") != std::string::npos);
}

TEST_CASE("search subcommands")
{
    auto csv = temp_path("scan.csv");
    auto r = run({ "search", "equality-scan", "--fixture", "fig3-g1", "--fixture", "fig3-g2", "--csv", csv });
    CHECK(r.code == exit_ok);
    auto text = slurp(csv);
    CHECK(text.starts_with("graph_id,alpha,core,corona,is_equality,is_ke,is_vwc,unique_mis\n"));
    CHECK(text.find("fig3-g2,3,2,4,1,0,0,0") != std::string::npos);

    auto json_path = temp_path("collection.json");
    auto c = run({ "search", "equality-collection", "--fixture", "star5", "--report", json_path });
    CHECK(c.code == exit_ok);
    CHECK(json::parse(slurp(json_path))["result"]["max_size"] == 1);

    auto path = temp_path("triangles.txt");
    spit(path, "n 9\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\ne 7 8\ne 8 9\ne 7 9\n");
    auto capped = run({ "search", "equality-collection", "--input", path, "--format", "edgelist", "--subset-cap", "10" });
    CHECK(capped.code == exit_failure);
}
