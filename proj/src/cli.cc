#include <corelab/cli.hh>
#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/graph_io.hh>
#include <corelab/paper_examples.hh>
#include <corelab/search.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace corelab
{
    namespace
    {
        struct UsageError : std::runtime_error
        {
            using std::runtime_error::runtime_error;
        };

        auto read_file(const std::string & path) -> std::string
        {
            std::ifstream in(path, std::ios::binary);
            if (! in)
                throw UsageError("cannot read '" + path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto write_file(const std::string & path, const std::string & text) -> void
        {
            std::ofstream out(path, std::ios::binary);
            if (! out || ! (out << text))
                throw UsageError("cannot write '" + path + "'");
        }

        auto dump(const json & j) -> std::string
        {
            return j.dump(2) + "\n";
        }

        struct NamedGraph
        {
            std::string id;
            Graph graph;
        };

        auto load_graphs(const std::string & input, const std::string & format, const std::vector<std::string> & fixture_names) -> std::vector<NamedGraph>
        {
            std::vector<NamedGraph> result;
            for (auto & name : fixture_names) {
                try {
                    result.push_back({ name, fixtures::by_name(name) });
                }
                catch (const std::invalid_argument & e) {
                    throw UsageError(e.what());
                }
            }
            if (input.empty())
                return result;

            auto text = read_file(input);
            if (format == "graph6") {
                auto graphs = parse_graph6_lines(text);
                for (std::size_t i = 0 ; i < graphs.size() ; ++i)
                    result.push_back({ input + "#" + std::to_string(i + 1), std::move(graphs[i]) });
            }
            else if (format == "edgelist")
                result.push_back({ input, parse_edge_list(text) });
            else
                throw UsageError("unknown format '" + format + "' (expected graph6 or edgelist)");
            return result;
        }

        auto parse_statements(const std::vector<std::string> & names) -> std::vector<StatementId>
        {
            std::vector<StatementId> result;
            for (auto & name : names) {
                try {
                    result.push_back(parse_statement_id(name));
                }
                catch (const std::invalid_argument & e) {
                    throw UsageError(e.what());
                }
            }
            return result;
        }

        auto split(const std::string & text, char sep) -> std::vector<std::string>
        {
            std::vector<std::string> parts;
            std::string current;
            std::istringstream in(text);
            while (std::getline(in, current, sep))
                if (! current.empty())
                    parts.push_back(current);
            return parts;
        }

        auto print_summary(std::ostream & out, const RunReport & report) -> void
        {
            auto & t = report.tally();
            out << "checks run: " << t.total() << "  passed: " << t.passed << "  failed: " << t.failed
                << "  skipped: " << t.skipped << "  errors: " << t.errors << '\n';
            for (auto & [name, s] : report.by_statement())
                out << "  " << std::left << std::setw(20) << name << " passed " << s.passed << ", failed " << s.failed
                    << ", skipped " << s.skipped << '\n';
        }

        auto display_width(const std::string & text) -> std::size_t
        {
            return std::count_if(text.begin(), text.end(), [] (char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; });
        }

        auto elapsed_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }

        struct VerifyArgs
        {
            std::string input, format = "graph6", report;
            std::vector<std::string> fixtures, statements;
            std::size_t omega_cap = default_omega_cap;
            bool exhaustive = false, reproducible = false;
            std::string set, collection;
        };

        auto cmd_verify(const VerifyArgs & a, std::ostream & out) -> int
        {
            auto start = std::chrono::steady_clock::now();
            auto graphs = load_graphs(a.input, a.format, a.fixtures);
            if (graphs.empty())
                throw UsageError("no input graphs (use --input or --fixture)");

            SuiteOptions options;
            options.omega_cap = a.omega_cap;
            options.statements = parse_statements(a.statements);
            options.exhaustive = a.exhaustive;

            json spec{ { "command", "verify" }, { "input", a.input }, { "format", a.format }, { "fixtures", a.fixtures },
                { "omega_cap", a.omega_cap }, { "exhaustive", a.exhaustive }, { "statements", a.statements } };
            if (! a.set.empty())
                spec["set"] = a.set;
            if (! a.collection.empty())
                spec["collection"] = a.collection;

            RunReport report(spec);
            for (auto & [id, g] : graphs) {
                auto graph_options = options;
                try {
                    if (! a.set.empty())
                        graph_options.extra_sets.push_back(g.labelled_set(split(a.set, ',')));
                    if (! a.collection.empty()) {
                        std::vector<VertexSet> members;
                        for (auto & part : split(a.collection, ';'))
                            members.push_back(g.labelled_set(split(part, ',')));
                        graph_options.lambda_override = MisFamily(g.order(), FamilyKind::arbitrary, std::move(members));
                    }
                }
                catch (const std::invalid_argument & e) {
                    throw UsageError(e.what());
                }
                report.add_graph(id, g, run_theorem_suite(g, graph_options), true);
            }

            auto j = report.to_json(elapsed_since(start), a.reproducible);
            for (auto & entry : j["results"])
                if (entry.contains("error"))
                    out << entry["graph_id"].get<std::string>() << ": error: " << entry["error"].get<std::string>() << '\n';
            print_summary(out, report);
            if (! a.report.empty())
                write_file(a.report, dump(j));

            return report.tally().failed == 0 && report.tally().errors == 0 ? exit_ok : exit_failure;
        }

        auto cmd_paper_examples(bool perturb, const std::string & report_path, std::ostream & out) -> int
        {
            ReplayOptions options;
            if (perturb) {
                // drop v7v8 from the 13-vertex example
                auto g = fixtures::set_collection_example();
                auto edges = g.edges();
                Edge drop{ *g.find_label("v7"), *g.find_label("v8") };
                edges.erase(std::remove(edges.begin(), edges.end(), drop), edges.end());
                options.fig1_override = Graph(g.order(), edges, g.labels());
            }

            auto rows = replay_paper_examples(options);
            std::size_t width = 0;
            for (auto & r : rows)
                width = std::max(width, display_width(r.name));

            json j = json::array();
            bool all_ok = true;
            for (auto & r : rows) {
                all_ok = all_ok && r.ok;
                out << (r.ok ? "[PASS] " : "[FAIL] ") << r.name << std::string(width - display_width(r.name) + 2, ' ') << r.computed;
                if (! r.ok)
                    out << "   (expected " << r.expected << ")";
                out << '\n';
                j.push_back({ { "claim", r.name }, { "expected", r.expected }, { "computed", r.computed }, { "ok", r.ok } });
            }
            out << (all_ok ? "all " + std::to_string(rows.size()) + " claims reproduced\n" : "MISMATCH: the example fixtures disagree with the stated values\n");
            if (std::any_of(rows.begin(), rows.end(), [] (const ReplayRow & r) { return ! r.ok && r.name.starts_with("fig1"); })) {
                auto g = options.fig1_override ? *options.fig1_override : fixtures::set_collection_example();
                out << "fig1 fixture edges:";
                for (auto [u, v] : g.edges())
                    out << ' ' << g.label(u) << g.label(v);
                out << '\n';
            }
            if (! report_path.empty())
                write_file(report_path, dump(json{ { "version", tool_version() }, { "rows", j }, { "all_ok", all_ok } }));
            return all_ok ? exit_ok : exit_failure;
        }

        struct SearchArgs
        {
            std::string kind, input, format = "graph6", report, csv;
            std::vector<std::string> fixtures;
            std::size_t omega_cap = default_omega_cap, subset_cap = default_subset_cap;
            unsigned threads = 1;
        };

        auto cmd_search(const SearchArgs & a, std::ostream & out) -> int
        {
            auto graphs = load_graphs(a.input, a.format, a.fixtures);
            if (a.kind == "equality-scan") {
                std::vector<Graph> gs;
                std::vector<std::string> ids;
                for (auto & [id, g] : graphs) {
                    gs.push_back(g);
                    ids.push_back(id);
                }
                auto scan = scan_equality(gs, a.omega_cap, a.threads, ids);
                auto & s = scan.summary;
                out << "graphs: " << s.graphs << "  equality: " << s.equality << "  non-equality: " << s.non_equality
                    << "  errors: " << s.errors << "  (ke " << s.ke << ", vwc " << s.vwc << ", unique MIS " << s.unique_mis
                    << ", none of these " << s.unexplained_equality << ")\n";
                if (! a.report.empty())
                    write_file(a.report, dump(json{ { "version", tool_version() }, { "kind", a.kind }, { "scan", scan_to_json(scan) } }));
                if (! a.csv.empty())
                    write_file(a.csv, scan_to_csv(scan));
                return exit_ok;
            }

            if (a.kind == "equality-collection") {
                if (graphs.size() != 1)
                    throw UsageError("equality-collection takes exactly one graph, got " + std::to_string(graphs.size()));
                auto & [id, g] = graphs.front();
                try {
                    auto result = largest_equality_collection(g, a.subset_cap, a.omega_cap);
                    out << id << ": largest equality collection has " << result.max_size << " of " << result.omega_size
                        << " maximum independent sets\n";
                    if (! a.report.empty())
                        write_file(a.report, dump(json{ { "version", tool_version() }, { "kind", a.kind }, { "graph_id", id },
                                { "graph6", serialize_graph6(g) }, { "result", collection_to_json(g, result) } }));
                    return exit_ok;
                }
                catch (const std::runtime_error & e) {
                    out << id << ": error: " << e.what() << '\n';
                    if (! a.report.empty())
                        write_file(a.report, dump(json{ { "version", tool_version() }, { "kind", a.kind }, { "graph_id", id }, { "error", e.what() } }));
                    return exit_failure;
                }
            }

            throw UsageError("unknown search kind '" + a.kind + "'");
        }
    }

    auto campaign_spec_to_json(const CampaignSpec & spec) -> json
    {
        json statements = json::array();
        for (auto id : spec.statements)
            statements.push_back(to_string(id));
        return {
            { "command", "campaign" },
            { "n_range", { spec.n_min, spec.n_max } },
            { "p_list", spec.p_list },
            { "count_per_cell", spec.count_per_cell },
            { "seed", spec.seed },
            { "omega_cap", spec.omega_cap },
            { "subset_cap", spec.subset_cap },
            { "statements", statements },
            { "generator", erdos_renyi_prng }
        };
    }

    auto run_campaign(const CampaignSpec & spec) -> RunReport
    {
        if (spec.n_min < 0 || spec.n_max < spec.n_min)
            throw std::invalid_argument("bad n range");
        if (spec.count_per_cell < 1)
            throw std::invalid_argument("count per cell must be at least 1");
        if (spec.p_list.empty())
            throw std::invalid_argument("empty p list");
        for (auto p : spec.p_list)
            if (! (p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("edge probability outside [0,1]");

        struct Job
        {
            int n;
            double p;
            std::uint64_t seed;
            std::string id;
        };
        std::vector<Job> jobs;
        std::uint64_t cell = 0;
        for (int n = spec.n_min ; n <= spec.n_max ; ++n)
            for (auto p : spec.p_list) {
                for (int k = 0 ; k < spec.count_per_cell ; ++k) {
                    std::ostringstream id;
                    id << "n=" << n << ",p=" << p << ",#" << k;
                    jobs.push_back({ n, p, derive_seed(spec.seed, cell, k), id.str() });
                }
                ++cell;
            }

        std::vector<GraphEntry> entries(jobs.size());
        std::atomic<std::size_t> next{ 0 };
        auto work = [&] {
            for (auto i = next++ ; i < jobs.size() ; i = next++) {
                auto & job = jobs[i];
                auto g = erdos_renyi(job.n, job.p, job.seed);
                SuiteOptions options;
                options.omega_cap = spec.omega_cap;
                options.statements = spec.statements;
                options.vary_lambda = true;
                options.seed = derive_seed(job.seed, 1);
                entries[i] = summarize_graph(job.id, g, run_theorem_suite(g, options), spec.full);
            }
        };

        unsigned threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
        {
            std::vector<std::jthread> workers;
            for (unsigned t = 0 ; t < threads ; ++t)
                workers.emplace_back(work);
        }

        RunReport report(campaign_spec_to_json(spec));
        for (auto & e : entries)
            report.add(std::move(e));
        return report;
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{ "corelab: maximum independent sets, core/corona, matchings, and checks of the set-and-collection inequalities" };
        app.set_version_flag("--version", tool_version());
        app.require_subcommand(1);

        VerifyArgs verify;
        auto * verify_cmd = app.add_subcommand("verify", "run the statement checkers on input graphs");
        verify_cmd->add_option("--input", verify.input, "graph file (graph6 lines or edge list)");
        verify_cmd->add_option("--fixture", verify.fixtures, "built-in graph: fig1, fig2, fig3-g1, fig3-g2, starN");
        verify_cmd->add_option("--format", verify.format, "graph6 or edgelist")->check(CLI::IsMember({ "graph6", "edgelist" }));
        verify_cmd->add_option("--statements", verify.statements, "comma-separated statement ids")->delimiter(',');
        verify_cmd->add_option("--report", verify.report, "write the JSON report here");
        verify_cmd->add_option("--omega-cap", verify.omega_cap, "maximum |Omega(G)| to enumerate");
        verify_cmd->add_flag("--exhaustive", verify.exhaustive, "let S range over every independent set (n <= 12)");
        verify_cmd->add_flag("--reproducible", verify.reproducible, "zero the timing fields");
        verify_cmd->add_option("--set", verify.set, "extra independent set S, comma-separated labels");
        verify_cmd->add_option("--collection", verify.collection, "collection to use instead of Omega(G): sets separated by ';'");

        bool perturb = false;
        std::string examples_report;
        auto * examples_cmd = app.add_subcommand("paper-examples", "replay the worked examples and print a pass/fail table");
        examples_cmd->add_flag("--perturb-fig1", perturb, "negative control: drop edge v7v8 from the 13-vertex example");
        examples_cmd->add_option("--report", examples_report, "write the table as JSON");

        CampaignSpec campaign;
        std::vector<std::string> campaign_statements;
        std::string campaign_report;
        bool campaign_reproducible = false;
        auto * campaign_cmd = app.add_subcommand("campaign", "seeded random campaign over the whole theorem suite");
        campaign_cmd->add_option("--n-min", campaign.n_min, "smallest vertex count")->capture_default_str();
        campaign_cmd->add_option("--n-max", campaign.n_max, "largest vertex count")->capture_default_str();
        campaign_cmd->add_option("--p", campaign.p_list, "comma-separated edge probabilities")->delimiter(',')->capture_default_str();
        campaign_cmd->add_option("--count", campaign.count_per_cell, "graphs per (n, p) cell")->capture_default_str();
        campaign_cmd->add_option("--seed", campaign.seed, "base seed")->capture_default_str();
        campaign_cmd->add_option("--omega-cap", campaign.omega_cap, "maximum |Omega(G)| to enumerate");
        campaign_cmd->add_option("--subset-cap", campaign.subset_cap, "recorded in the spec echo");
        campaign_cmd->add_option("--statements", campaign_statements, "comma-separated statement ids")->delimiter(',');
        campaign_cmd->add_option("--report", campaign_report, "write the JSON report here");
        campaign_cmd->add_option("--threads", campaign.threads, "worker threads (0 = all cores)");
        campaign_cmd->add_flag("--full", campaign.full, "keep passing checks in the report");
        campaign_cmd->add_flag("--reproducible", campaign_reproducible, "zero the timing fields");

        SearchArgs search;
        auto * search_cmd = app.add_subcommand("search", "open-problem explorers");
        search_cmd->add_option("kind", search.kind, "equality-scan or equality-collection")->required()
            ->check(CLI::IsMember({ "equality-scan", "equality-collection" }));
        search_cmd->add_option("--input", search.input, "graph file");
        search_cmd->add_option("--fixture", search.fixtures, "built-in graph(s)");
        search_cmd->add_option("--format", search.format, "graph6 or edgelist")->check(CLI::IsMember({ "graph6", "edgelist" }));
        search_cmd->add_option("--omega-cap", search.omega_cap, "maximum |Omega(G)| to enumerate");
        search_cmd->add_option("--subset-cap", search.subset_cap, "maximum |Omega(G)| for the exhaustive collection search");
        search_cmd->add_option("--report", search.report, "write JSON here");
        search_cmd->add_option("--csv", search.csv, "write scan rows as CSV here");
        search_cmd->add_option("--threads", search.threads, "worker threads for scans (0 = all cores)");
        bool search_reproducible = false;
        search_cmd->add_flag("--reproducible", search_reproducible, "accepted for symmetry; search output has no timing fields");

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_ok : exit_usage;
        }

        try {
            if (verify_cmd->parsed())
                return cmd_verify(verify, out);
            if (examples_cmd->parsed())
                return cmd_paper_examples(perturb, examples_report, out);
            if (campaign_cmd->parsed()) {
                campaign.statements = parse_statements(campaign_statements);
                auto start = std::chrono::steady_clock::now();
                RunReport report = [&] {
                    try {
                        return run_campaign(campaign);
                    }
                    catch (const std::invalid_argument & e) {
                        throw UsageError(e.what());
                    }
                }();
                print_summary(out, report);
                if (! campaign_report.empty())
                    write_file(campaign_report, dump(report.to_json(elapsed_since(start), campaign_reproducible)));
                return report.tally().failed == 0 ? exit_ok : exit_failure;
            }
            if (search_cmd->parsed())
                return cmd_search(search, out);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return exit_usage;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_failure;
        }
        return exit_usage;
    }
}
