#include <corelab/report.hh>
#include <corelab/graph_io.hh>

#include <algorithm>
#include <sstream>

#ifndef CORELAB_VERSION
#define CORELAB_VERSION "dev"
#endif

namespace corelab
{
    namespace
    {
        auto vertex_from_json(const Graph & g, const json & j) -> Vertex
        {
            if (! j.is_string())
                throw std::invalid_argument("vertex label must be a string");
            auto v = g.find_label(j.get<std::string>());
            if (! v)
                throw std::invalid_argument("unknown vertex label '" + j.get<std::string>() + "'");
            return *v;
        }

        auto relation_holds(const CheckReport & r) -> std::optional<bool>
        {
            if (r.relation == "<=")
                return r.lhs <= r.rhs;
            if (r.relation == ">=")
                return r.lhs >= r.rhs;
            if (r.relation == "==")
                return r.lhs == r.rhs;
            if (r.relation == "implies" && r.condition_bit && r.equality_bit)
                return ! *r.condition_bit || *r.equality_bit;
            if (r.relation == "iff" && r.condition_bit)
                return *r.condition_bit == (r.lhs == r.rhs);
            if (r.relation == "from-into")
                return std::holds_alternative<Matching>(r.witness);
            return std::nullopt;
        }

        auto parse_verdict(const std::string & s) -> Verdict
        {
            for (auto v : { Verdict::passed, Verdict::failed, Verdict::skipped })
                if (to_string(v) == s)
                    return v;
            throw std::invalid_argument("unknown verdict '" + s + "'");
        }

        auto parse_family_kind(const std::string & s) -> FamilyKind
        {
            for (auto k : { FamilyKind::maximum_independent, FamilyKind::maximum_clique, FamilyKind::maximal_independent, FamilyKind::arbitrary })
                if (to_string(k) == s)
                    return k;
            throw std::invalid_argument("unknown family kind '" + s + "'");
        }
    }

    auto tool_version() -> std::string
    {
        return CORELAB_VERSION;
    }

    auto set_to_json(const Graph & g, const VertexSet & s) -> json
    {
        json result = json::array();
        s.for_each([&] (Vertex v) { result.push_back(g.label(v)); });
        return result;
    }

    auto set_from_json(const Graph & g, const json & j) -> VertexSet
    {
        if (! j.is_array())
            throw std::invalid_argument("vertex set must be an array");
        VertexSet result(g.order());
        for (auto & item : j)
            result.insert(vertex_from_json(g, item));
        return result;
    }

    auto check_report_to_json(const Graph & g, const CheckReport & r) -> json
    {
        json j;
        j["statement"] = to_string(r.id);
        j["verdict"] = to_string(r.verdict);
        j["lhs"] = r.lhs;
        j["relation"] = r.relation;
        j["rhs"] = r.rhs;
        if (r.equality_bit)
            j["equality_bit"] = *r.equality_bit;
        if (r.condition_bit)
            j["condition_bit"] = *r.condition_bit;

        if (auto m = std::get_if<Matching>(&r.witness)) {
            auto edges = m->edges;
            std::sort(edges.begin(), edges.end());
            json pairs = json::array();
            for (auto [u, v] : edges)
                pairs.push_back(json::array({ g.label(u), g.label(v) }));
            json w{ { "type", "matching" }, { "edges", pairs } };
            if (m->saturates)
                w["saturates"] = set_to_json(g, *m->saturates);
            if (m->into)
                w["into"] = set_to_json(g, *m->into);
            j["witness"] = w;
        }
        else if (auto f = std::get_if<MisFamily>(&r.witness)) {
            json members = json::array();
            for (auto & s : f->members())
                members.push_back(set_to_json(g, s));
            j["witness"] = { { "type", "family" }, { "kind", to_string(f->kind()) }, { "members", members } };
        }
        else if (auto s = std::get_if<VertexSet>(&r.witness))
            j["witness"] = { { "type", "set" }, { "members", set_to_json(g, *s) } };
        else
            j["witness"] = nullptr;

        j["inputs_digest"] = r.inputs_digest;
        if (! r.note.empty())
            j["note"] = r.note;
        return j;
    }

    auto check_report_from_json(const Graph & g, const json & j) -> CheckReport
    {
        try {
            CheckReport r;
            r.id = parse_statement_id(j.at("statement").get<std::string>());
            r.verdict = parse_verdict(j.at("verdict").get<std::string>());
            r.lhs = j.at("lhs").get<long long>();
            r.rhs = j.at("rhs").get<long long>();
            r.relation = j.at("relation").get<std::string>();
            if (j.contains("equality_bit"))
                r.equality_bit = j["equality_bit"].get<bool>();
            if (j.contains("condition_bit"))
                r.condition_bit = j["condition_bit"].get<bool>();
            r.inputs_digest = j.value("inputs_digest", "");
            r.note = j.value("note", "");

            const auto & w = j.at("witness");
            if (! w.is_null()) {
                auto type = w.at("type").get<std::string>();
                if (type == "matching") {
                    Matching m;
                    for (auto & pair : w.at("edges"))
                        m.edges.emplace_back(vertex_from_json(g, pair.at(0)), vertex_from_json(g, pair.at(1)));
                    if (w.contains("saturates"))
                        m.saturates = set_from_json(g, w["saturates"]);
                    if (w.contains("into"))
                        m.into = set_from_json(g, w["into"]);
                    r.witness = std::move(m);
                }
                else if (type == "family") {
                    std::vector<VertexSet> members;
                    for (auto & s : w.at("members"))
                        members.push_back(set_from_json(g, s));
                    r.witness = MisFamily(g.order(), parse_family_kind(w.at("kind").get<std::string>()), std::move(members));
                }
                else if (type == "set")
                    r.witness = set_from_json(g, w.at("members"));
                else
                    throw std::invalid_argument("unknown witness type '" + type + "'");
            }
            return r;
        }
        catch (const json::exception & e) {
            throw std::invalid_argument(std::string("malformed check report: ") + e.what());
        }
    }

    auto Tally::add(const CheckReport & r) -> void
    {
        switch (r.verdict) {
            case Verdict::passed:  ++passed; break;
            case Verdict::failed:  ++failed; break;
            case Verdict::skipped: ++skipped; break;
        }
    }

    auto Tally::operator+= (const Tally & other) -> Tally &
    {
        passed += other.passed;
        failed += other.failed;
        skipped += other.skipped;
        errors += other.errors;
        return *this;
    }

    RunReport::RunReport(json spec) :
        _spec(std::move(spec))
    {
    }

    auto summarize_graph(const std::string & graph_id, const Graph & g, const SuiteResult & result, bool full) -> GraphEntry
    {
        GraphEntry out;
        auto & entry = out.body;
        entry["graph_id"] = graph_id;
        entry["graph6"] = serialize_graph6(g);
        entry["n"] = g.order();
        entry["m"] = g.edge_count();
        if (g.has_labels())
            entry["labels"] = g.labels();

        json checks = json::array();
        for (auto & r : result.reports) {
            out.tally.add(r);
            out.by_statement[to_string(r.id)].add(r);
            if (full || ! r.passed())
                checks.push_back(check_report_to_json(g, r));
        }
        if (result.error) {
            ++out.tally.errors;
            out.error = true;
            entry["error"] = *result.error;
        }

        auto & t = out.tally;
        entry["counts"] = { { "passed", t.passed }, { "failed", t.failed }, { "skipped", t.skipped }, { "errors", t.errors } };
        entry["checks"] = checks;
        return out;
    }

    auto RunReport::add_graph(const std::string & graph_id, const Graph & g, const SuiteResult & result, bool full) -> void
    {
        add(summarize_graph(graph_id, g, result, full));
    }

    auto RunReport::add(GraphEntry entry) -> void
    {
        _tally += entry.tally;
        for (auto & [k, v] : entry.by_statement)
            _by_statement[k] += v;
        _graph_errors += entry.error;
        _results.push_back(std::move(entry.body));
    }

    auto RunReport::to_json(double wall_time_seconds, bool reproducible) const -> json
    {
        json statements = json::object();
        for (auto & [k, v] : _by_statement)
            statements[k] = { { "passed", v.passed }, { "failed", v.failed }, { "skipped", v.skipped } };

        json report;
        report["version"] = tool_version();
        report["spec"] = _spec;
        report["results"] = _results;
        report["summary"] = {
            { "graphs", _results.size() },
            { "checks_run", _tally.total() },
            { "passed", _tally.passed },
            { "failed", _tally.failed },
            { "skipped", _tally.skipped },
            { "errors", _tally.errors },
            { "by_statement", statements },
            { "wall_time_seconds", reproducible ? 0.0 : wall_time_seconds }
        };
        return report;
    }

    auto revalidate_run_report(const json & report) -> std::vector<std::string>
    {
        std::vector<std::string> problems;
        if (! report.contains("results") || ! report["results"].is_array()) {
            problems.emplace_back("report has no results array");
            return problems;
        }

        for (auto & entry : report["results"]) {
            auto id = entry.value("graph_id", "?");
            try {
                auto plain = parse_graph6(entry.at("graph6").get<std::string>());
                Graph g = plain;
                if (entry.contains("labels"))
                    g = Graph(plain.order(), plain.edges(), entry["labels"].get<std::vector<std::string>>());

                for (auto & jr : entry.at("checks")) {
                    auto r = check_report_from_json(g, jr);
                    auto where = id + "/" + to_string(r.id);
                    if (auto problem = revalidate_witness(g, r))
                        problems.push_back(where + ": witness: " + *problem);
                    if (r.verdict != Verdict::skipped)
                        if (auto holds = relation_holds(r) ; holds && *holds != r.passed())
                            problems.push_back(where + ": verdict " + to_string(r.verdict) + " contradicts " + std::to_string(r.lhs) + " " + r.relation + " " + std::to_string(r.rhs));
                }
            }
            catch (const std::exception & e) {
                problems.push_back(id + ": " + e.what());
            }
        }
        return problems;
    }

    auto classification_to_json(const EqualityClassification & c) -> json
    {
        return {
            { "graph_id", c.graph_id },
            { "alpha", c.alpha },
            { "core", c.core_size },
            { "corona", c.corona_size },
            { "is_equality", c.is_equality },
            { "is_ke", c.is_ke },
            { "is_vwc", c.is_vwc },
            { "unique_mis", c.has_unique_mis }
        };
    }

    auto scan_to_json(const ScanResult & scan) -> json
    {
        json rows = json::array();
        for (auto & row : scan.rows) {
            if (row.classification)
                rows.push_back(classification_to_json(*row.classification));
            else
                rows.push_back({ { "graph_id", row.graph_id }, { "error", row.error.value_or("") } });
        }
        auto & s = scan.summary;
        json combos = json::object();
        for (auto & [k, v] : s.combinations)
            combos[k] = v;
        return {
            { "rows", rows },
            { "summary", {
                { "graphs", s.graphs },
                { "errors", s.errors },
                { "equality", s.equality },
                { "non_equality", s.non_equality },
                { "ke", s.ke },
                { "vwc", s.vwc },
                { "unique_mis", s.unique_mis },
                { "equality_without_known_reason", s.unexplained_equality },
                { "combinations", combos } } }
        };
    }

    auto scan_to_csv(const ScanResult & scan) -> std::string
    {
        std::ostringstream out;
        out << "graph_id,alpha,core,corona,is_equality,is_ke,is_vwc,unique_mis\n";
        for (auto & row : scan.rows) {
            if (! row.classification) {
                out << row.graph_id << ",,,,,,,\n";
                continue;
            }
            auto & c = *row.classification;
            out << c.graph_id << ',' << c.alpha << ',' << c.core_size << ',' << c.corona_size << ','
                << c.is_equality << ',' << c.is_ke << ',' << c.is_vwc << ',' << c.has_unique_mis << '\n';
        }
        return out.str();
    }

    auto collection_to_json(const Graph & g, const EqualityCollectionResult & r) -> json
    {
        json members = json::array();
        for (auto & s : r.witness.members())
            members.push_back(set_to_json(g, s));
        return {
            { "max_size", r.max_size },
            { "omega_size", r.omega_size },
            { "exhaustive", r.exhaustive },
            { "witness", members }
        };
    }
}
