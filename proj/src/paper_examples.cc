#include <corelab/paper_examples.hh>
#include <corelab/fixtures.hh>
#include <corelab/generate.hh>
#include <corelab/lemmas.hh>
#include <corelab/matching.hh>
#include <corelab/mis.hh>

#include <algorithm>

namespace corelab
{
    namespace
    {
        struct Recorder
        {
            std::vector<ReplayRow> rows;

            auto expect(std::string name, std::string expected, std::string computed) -> void
            {
                bool ok = expected == computed;
                rows.push_back({ std::move(name), std::move(expected), std::move(computed), ok });
            }

            auto expect(std::string name, long long expected, long long computed) -> void
            {
                expect(std::move(name), std::to_string(expected), std::to_string(computed));
            }

            auto expect_bool(std::string name, bool expected, bool computed) -> void
            {
                expect(std::move(name), expected ? "true" : "false", computed ? "true" : "false");
            }

            // Evaluates body, turning an unexpected exception into a failed row.
            template <typename F>
            auto guarded(const std::string & name, F && body) -> void
            {
                try {
                    body();
                }
                catch (const std::exception & e) {
                    rows.push_back({ name, "no error", std::string("error: ") + e.what(), false });
                }
            }
        };

        auto matching_text(const Graph & g, const Matching & m) -> std::string
        {
            std::vector<std::string> pairs;
            for (auto [u, v] : m.edges) {
                auto a = g.label(std::min(u, v)), b = g.label(std::max(u, v));
                pairs.push_back(a + b);
            }
            std::sort(pairs.begin(), pairs.end());
            std::string result = "{";
            for (std::size_t i = 0 ; i < pairs.size() ; ++i)
                result += (i ? "," : "") + pairs[i];
            return result + "}";
        }

        auto family(const Graph & g, std::initializer_list<std::initializer_list<const char *>> sets) -> MisFamily
        {
            std::vector<VertexSet> members;
            for (auto & s : sets)
                members.push_back(g.labelled_set(std::vector<std::string>(s.begin(), s.end())));
            return MisFamily(g.order(), FamilyKind::arbitrary, std::move(members));
        }
    }

    auto replay_paper_examples(const ReplayOptions & options) -> std::vector<ReplayRow>
    {
        Recorder rec;

        auto fig1 = options.fig1_override ? *options.fig1_override : fixtures::set_collection_example();

        rec.guarded("fig1", [&] {
            LemmaLab lab(fig1);
            rec.expect("fig1: alpha", 7, lab.alpha());
            rec.expect("fig1: core", "{v1,v2,v10}", fig1.format(lab.core_corona().core));

            auto s = fig1.labelled_set({ "v1", "v4", "v7" });
            auto lambda = family(fig1, { { "v1", "v2", "v3", "v6", "v8", "v10", "v12" }, { "v1", "v2", "v4", "v6", "v7", "v10", "v13" } });
            rec.expect("fig1: S - ∩Λ", "{v4,v7}", fig1.format(s - lambda.intersection()));
            rec.expect("fig1: ∪Λ - S", "{v2,v3,v6,v8,v10,v12,v13}", fig1.format(lambda.union_of() - s));

            auto parts = lab.check_matching_lemma(s, lambda, 0);
            auto & part_i = parts[0];
            rec.expect_bool("fig1: matching from S - ∩Λ into ∪Λ - S exists", true, part_i.passed());
            if (auto m = std::get_if<Matching>(&part_i.witness))
                rec.expect("fig1: matching M", "{v3v4,v7v8}", matching_text(fig1, *m));
            rec.expect_bool("fig1: Matching Lemma (ii), (iii) hold", true, parts[1].passed() && parts[2].passed());

            auto scl = lab.check_set_collection(s, lambda);
            rec.expect("fig1: |S| + alpha <= |∩Λ∩S| + |∪Λ∪S|", "10 <= 11 (holds)",
                    std::to_string(scl.lhs) + " <= " + std::to_string(scl.rhs) + (scl.passed() ? " (holds)" : " (fails)"));
        });

        rec.guarded("fig1 invalid collection", [&] {
            LemmaLab lab(fig1);
            auto s = fig1.labelled_set({ "v1", "v2", "v4", "v7", "v9", "v12" });
            auto lambda = family(fig1, { { "v2", "v3", "v7" }, { "v1", "v2", "v4", "v6", "v7", "v10", "v12" } });

            std::string hypothesis = "accepted";
            try {
                (void) lab.check_set_collection(s, lambda);
            }
            catch (const PreconditionError &) {
                hypothesis = "rejected";
            }
            rec.expect("invalid Λ: Set and Collection hypotheses", "rejected", hypothesis);

            auto demo = lab.demonstrate_necessity(s, lambda);
            rec.expect_bool("invalid Λ: Λ ⊆ Ω(G)", false, demo.family_is_maximum);
            rec.expect("invalid Λ: S - ∩Λ", "{v1,v4,v9,v12}", fig1.format(demo.from));
            rec.expect("invalid Λ: ∪Λ - S", "{v3,v6,v10}", fig1.format(demo.into));
            rec.expect_bool("invalid Λ: matching from S - ∩Λ into ∪Λ - S exists", false, demo.part_i.saturating());
            rec.expect("invalid Λ: 2|S| vs |∩Λ∩S| + |∪Λ∪S|", "12 <= 11 false",
                    std::to_string(demo.twice_set) + " <= " + std::to_string(demo.rhs) + (demo.doubled_inequality_holds() ? " true" : " false"));
            rec.expect_bool("invalid Λ: |S| + alpha <= |∩Λ∩S| + |∪Λ∪S|", false, demo.inequality_holds());
        });

        rec.guarded("fig2", [&] {
            auto g = fixtures::two_leaf_core_example();
            auto cc = core_corona(g);
            rec.expect("fig2: core", "{v8,v10}", g.format(cc.core));
            auto cover = cc.corona | neighbourhood(g, cc.core) | g.labelled_set({ "v5" });
            rec.expect_bool("fig2: V = corona ∪ N(core) ∪ {v5}", true, cover == g.vertices());
        });

        rec.guarded("fig3 G1", [&] {
            auto g = fixtures::strict_inequality_example();
            LemmaLab lab(g);
            auto & cc = lab.core_corona();
            rec.expect("G1: alpha", 4, lab.alpha());
            rec.expect("G1: core", "{v8,v9}", g.format(cc.core));
            rec.expect("G1: corona", "{v1,v3,v4,v5,v7,v8,v9}", g.format(cc.corona));
            rec.expect("G1: 2 alpha vs |core| + |corona|", "8 < 9",
                    std::to_string(2 * cc.alpha) + (2 * cc.alpha < cc.core.size() + cc.corona.size() ? " < " : " >= ")
                    + std::to_string(cc.core.size() + cc.corona.size()));
            rec.expect_bool("G1: König-Egerváry", false, lab.alpha() + lab.matching_number() == g.order());
        });

        rec.guarded("fig3 G2", [&] {
            auto g = fixtures::non_ke_equality_example();
            LemmaLab lab(g);
            auto & cc = lab.core_corona();
            rec.expect("G2: alpha", 3, lab.alpha());
            rec.expect("G2: core", "{u2,u4}", g.format(cc.core));
            rec.expect("G2: corona", "{u2,u4,u6,u7}", g.format(cc.corona));
            rec.expect("G2: 2 alpha = |core| + |corona|", "6 = 2+4",
                    std::to_string(2 * cc.alpha) + (2 * cc.alpha == cc.core.size() + cc.corona.size() ? " = " : " != ")
                    + std::to_string(cc.core.size()) + "+" + std::to_string(cc.corona.size()));
            rec.expect_bool("G2: König-Egerváry", false, lab.alpha() + lab.matching_number() == g.order());
        });

        for (int n = options.star_min ; n <= options.star_max ; ++n)
            rec.guarded("star", [&] {
                auto g = star(n);
                auto cc = core_corona(g);
                auto sum = cc.core.size() + cc.corona.size();
                rec.expect("K_{1," + std::to_string(n - 1) + "}: |core| + |corona| = 2(n-1) = alpha + n - 1",
                        std::to_string(2 * (n - 1)) + " = " + std::to_string(2 * (n - 1)) + " = " + std::to_string(2 * (n - 1)),
                        std::to_string(sum) + " = " + std::to_string(2 * (n - 1)) + " = " + std::to_string(cc.alpha + n - 1));
            });

        return rec.rows;
    }
}
