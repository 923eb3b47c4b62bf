#include <corelab/lemmas.hh>
#include <corelab/graph_io.hh>

#include <algorithm>
#include <random>

namespace corelab
{
    namespace
    {
        auto make_report(StatementId id, long long lhs, long long rhs, std::string relation, bool holds) -> CheckReport
        {
            CheckReport r;
            r.id = id;
            r.lhs = lhs;
            r.rhs = rhs;
            r.relation = std::move(relation);
            r.verdict = holds ? Verdict::passed : Verdict::failed;
            return r;
        }

        auto family_text(const MisFamily & f) -> std::string
        {
            std::string result = "[";
            for (std::size_t i = 0 ; i < f.size() ; ++i)
                result += (i ? "," : "") + f[i].to_string();
            return result + "]";
        }

        auto digest_field(const std::string & digest, const std::string & key) -> std::optional<std::string>
        {
            std::size_t start = 0;
            while (start <= digest.size()) {
                auto end = digest.find(';', start);
                if (end == std::string::npos)
                    end = digest.size();
                auto field = digest.substr(start, end - start);
                if (field.starts_with(key + "="))
                    return field.substr(key.size() + 1);
                start = end + 1;
            }
            return std::nullopt;
        }

        // Reads the "{0,3}" and "[{0},{1,2}]" forms written by the digest.
        auto sets_from_text(std::size_t n, const std::string & text) -> std::vector<VertexSet>
        {
            std::vector<VertexSet> result;
            std::optional<VertexSet> current;
            std::string number;
            for (char c : text) {
                if (c == '{')
                    current = VertexSet(n);
                else if (c == ',' || c == '}') {
                    if (current && ! number.empty())
                        current->insert(std::stoi(number));
                    number.clear();
                    if (c == '}' && current) {
                        result.push_back(*current);
                        current.reset();
                    }
                }
                else if (c >= '0' && c <= '9')
                    number += c;
            }
            return result;
        }

        auto digest_set(const Graph & g, const CheckReport & r, const std::string & key) -> std::optional<VertexSet>
        {
            auto text = digest_field(r.inputs_digest, key);
            if (! text)
                return std::nullopt;
            auto sets = sets_from_text(g.order(), *text);
            if (sets.size() != 1)
                return std::nullopt;
            return sets.front();
        }

        // The (from, into) pair a saturation check was run on, rebuilt from its digest.
        auto saturation_sides(const Graph & g, const CheckReport & r) -> std::optional<std::pair<VertexSet, VertexSet>>
        {
            auto s = digest_set(g, r, "S");
            if (! s)
                return std::nullopt;
            if (r.id == StatementId::COR1_core_matching) {
                auto cc = core_corona(g);
                return std::pair{ *s - cc.core, cc.corona - *s };
            }
            auto x = digest_set(g, r, "X");
            auto l = digest_field(r.inputs_digest, "L");
            if (! x || ! l)
                return std::nullopt;
            MisFamily lambda(g.order(), FamilyKind::arbitrary, sets_from_text(g.order(), *l));
            if (lambda.empty())
                return std::nullopt;
            auto common = lambda.intersection(), all = lambda.union_of();
            switch (r.id) {
                case StatementId::ML_i:   return std::pair{ *s - common, all - *s };
                case StatementId::ML_ii:  return std::pair{ *s - *x, *x - *s };
                case StatementId::ML_iii: return std::pair{ (*s & *x) - common, all - (*x | *s) };
                default:                  return std::nullopt;
            }
        }
    }

    auto to_string(StatementId id) -> std::string
    {
        switch (id) {
            case StatementId::ML_i:               return "ML_i";
            case StatementId::ML_ii:              return "ML_ii";
            case StatementId::ML_iii:             return "ML_iii";
            case StatementId::SCL:                return "SCL";
            case StatementId::COR3:               return "COR3";
            case StatementId::COR2_core_corona:   return "COR2_core_corona";
            case StatementId::PROP2:              return "PROP2";
            case StatementId::PROP1_KE:           return "PROP1_KE";
            case StatementId::GITVAL:             return "GITVAL";
            case StatementId::COR1_core_matching: return "COR1_core_matching";
            case StatementId::HAJNAL:             return "HAJNAL";
            case StatementId::BERGE:              return "BERGE";
        }
        throw std::logic_error("bad StatementId");
    }

    auto parse_statement_id(const std::string & name) -> StatementId
    {
        for (auto id : all_statements)
            if (to_string(id) == name)
                return id;
        throw std::invalid_argument("unknown statement '" + name + "'");
    }

    auto to_string(Verdict v) -> std::string
    {
        switch (v) {
            case Verdict::passed:  return "passed";
            case Verdict::failed:  return "failed";
            case Verdict::skipped: return "skipped";
        }
        throw std::logic_error("bad Verdict");
    }

    LemmaLab::LemmaLab(Graph g, std::size_t omega_cap) :
        _g(std::move(g)),
        _omega_cap(omega_cap)
    {
    }

    LemmaLab::~LemmaLab() = default;
    LemmaLab::LemmaLab(LemmaLab &&) noexcept = default;

    auto LemmaLab::alpha() -> int
    {
        if (! _alpha)
            _alpha = independence_number(_g);
        return *_alpha;
    }

    auto LemmaLab::omega() -> const MisFamily &
    {
        if (! _omega)
            _omega = enumerate_omega(_g, _omega_cap);
        return *_omega;
    }

    auto LemmaLab::core_corona() -> const CoreCorona &
    {
        if (! _core_corona)
            _core_corona = corelab::core_corona(omega());
        return *_core_corona;
    }

    auto LemmaLab::matching_number() -> int
    {
        if (! _mu)
            _mu = maximum_matching_size(_g);
        return *_mu;
    }

    auto LemmaLab::clique_number() -> int
    {
        if (! _omega_number)
            _omega_number = complement_lab().alpha();
        return *_omega_number;
    }

    auto LemmaLab::complement_lab() -> LemmaLab &
    {
        if (! _complement)
            _complement = std::make_unique<LemmaLab>(complement(_g), _omega_cap);
        return *_complement;
    }

    auto LemmaLab::require_independent(const VertexSet & s, const char * name) -> void
    {
        if (s.universe() != _g.order())
            throw PreconditionError(std::string(name) + " is over a different vertex set");
        if (! is_independent(_g, s))
            throw PreconditionError(std::string(name) + "=" + _g.format(s) + " is not independent");
    }

    auto LemmaLab::require_maximum_family(const MisFamily & lambda) -> void
    {
        if (lambda.empty())
            throw PreconditionError("the collection is empty");
        if (lambda.universe() != _g.order())
            throw PreconditionError("the collection is over a different vertex set");
        for (auto & m : lambda.members())
            if (! is_independent(_g, m) || m.size() != alpha())
                throw PreconditionError("collection not contained in Omega(G): " + _g.format(m)
                        + (is_independent(_g, m) ? " has size " + std::to_string(m.size()) + " < alpha=" + std::to_string(alpha()) : " is not independent"));
    }

    auto LemmaLab::digest(std::initializer_list<std::pair<const char *, const VertexSet *>> sets, const MisFamily * family) const -> std::string
    {
        std::string result = "g6=" + serialize_graph6(_g);
        for (auto & [name, set] : sets)
            result += std::string(";") + name + "=" + set->to_string();
        if (family)
            result += ";L=" + family_text(*family);
        return result;
    }

    auto LemmaLab::saturation_report(StatementId id, const VertexSet & a, const VertexSet & b, std::string digest) -> CheckReport
    {
        auto certificate = saturating_matching(_g, a, b);
        auto r = make_report(id, a.size(), b.size(), "from-into", certificate.saturating());
        if (certificate.saturating())
            r.witness = certificate.matching();
        else {
            r.witness = certificate.violator();
            r.note = "Hall violator " + _g.format(certificate.violator()) + " has only "
                + std::to_string((neighbourhood(_g, certificate.violator()) & b).size()) + " neighbours in the target";
        }
        r.inputs_digest = std::move(digest);
        return r;
    }

    auto LemmaLab::check_matching_lemma(const VertexSet & s, const MisFamily & lambda, std::size_t x_index) -> std::array<CheckReport, 3>
    {
        require_independent(s, "S");
        require_maximum_family(lambda);
        if (x_index >= lambda.size())
            throw PreconditionError("X index " + std::to_string(x_index) + " outside the collection");

        const auto & x = lambda[x_index];
        auto common = lambda.intersection();
        auto all = lambda.union_of();
        auto d = digest({ { "S", &s }, { "X", &x } }, &lambda);

        return {
            saturation_report(StatementId::ML_i, s - common, all - s, d),
            saturation_report(StatementId::ML_ii, s - x, x - s, d),
            saturation_report(StatementId::ML_iii, (s & x) - common, all - (x | s), d)
        };
    }

    auto LemmaLab::check_set_collection(const VertexSet & s, const MisFamily & lambda) -> CheckReport
    {
        require_independent(s, "S");
        require_maximum_family(lambda);
        long long lhs = s.size() + alpha();
        long long rhs = (lambda.intersection() & s).size() + (lambda.union_of() | s).size();
        auto r = make_report(StatementId::SCL, lhs, rhs, "<=", lhs <= rhs);
        r.inputs_digest = digest({ { "S", &s } }, &lambda);
        return r;
    }

    auto LemmaLab::demonstrate_necessity(const VertexSet & s, const MisFamily & lambda) -> NecessityDemo
    {
        require_independent(s, "S");
        if (lambda.empty())
            throw PreconditionError("the collection is empty");

        bool maximum = std::all_of(lambda.members().begin(), lambda.members().end(),
                [&] (const VertexSet & m) { return is_independent(_g, m) && m.size() == alpha(); });
        auto common = lambda.intersection();
        auto all = lambda.union_of();
        auto from = s - common;
        auto into = all - s;

        return NecessityDemo{
            maximum,
            saturating_matching(_g, from, into),
            s.size() + alpha(),
            2LL * s.size(),
            (common & s).size() + (all | s).size(),
            from,
            into
        };
    }

    auto LemmaLab::check_collection_bound(const MisFamily & lambda) -> CheckReport
    {
        require_maximum_family(lambda);
        long long lhs = 2LL * alpha();
        long long rhs = lambda.intersection().size() + lambda.union_of().size();
        auto r = make_report(StatementId::COR3, lhs, rhs, "<=", lhs <= rhs);
        r.inputs_digest = digest({ }, &lambda);
        return r;
    }

    auto LemmaLab::check_core_corona_bounds() -> std::array<CheckReport, 2>
    {
        const auto & cc = core_corona();
        long long sum = cc.core.size() + cc.corona.size();
        auto d = digest({ });

        auto lower = make_report(StatementId::COR2_core_corona, 2LL * cc.alpha, sum, "<=", 2LL * cc.alpha <= sum);
        lower.inputs_digest = d;

        auto upper = make_report(StatementId::PROP2, sum, cc.alpha + _g.order() - 1LL, "<=", sum <= cc.alpha + _g.order() - 1LL);
        upper.inputs_digest = d;
        if (_g.edge_count() == 0) {
            upper.verdict = Verdict::skipped;
            upper.note = "edgeless graph: hypothesis E(G) non-empty not met";
        }
        return { lower, upper };
    }

    auto LemmaLab::check_ke_equality() -> CheckReport
    {
        const auto & cc = core_corona();
        bool ke = alpha() + matching_number() == _g.order();
        long long lhs = 2LL * cc.alpha;
        long long rhs = cc.core.size() + cc.corona.size();
        auto r = make_report(StatementId::PROP1_KE, lhs, rhs, "implies", ! ke || lhs == rhs);
        r.equality_bit = lhs == rhs;
        r.condition_bit = ke;
        r.note = ke ? "König-Egerváry graph (alpha + mu = n)" : "not König-Egerváry: implication holds vacuously";
        r.inputs_digest = digest({ });
        return r;
    }

    auto LemmaLab::check_gitval() -> CheckReport
    {
        const auto & cc = core_corona();
        long long tau = _g.order() - cc.alpha;
        // ∩{V - S : S ∈ Ω} = V - corona
        long long outside = _g.order() - cc.corona.size();
        long long lhs = cc.alpha - cc.core.size();
        long long rhs = tau - outside;
        auto r = make_report(StatementId::GITVAL, lhs, rhs, "<=", lhs <= rhs);
        r.inputs_digest = digest({ });
        return r;
    }

    auto LemmaLab::check_core_matching(std::size_t s_index) -> CheckReport
    {
        const auto & family = omega();
        if (s_index >= family.size())
            throw PreconditionError("S index " + std::to_string(s_index) + " outside Omega(G) of size " + std::to_string(family.size()));
        const auto & s = family[s_index];
        const auto & cc = core_corona();
        return saturation_report(StatementId::COR1_core_matching, s - cc.core, cc.corona - s, digest({ { "S", &s } }));
    }

    auto LemmaLab::check_hajnal(const MisFamily & gamma) -> CheckReport
    {
        if (gamma.empty())
            throw PreconditionError("the clique collection is empty");
        if (gamma.universe() != _g.order())
            throw PreconditionError("the clique collection is over a different vertex set");
        for (auto & c : gamma.members())
            if (! is_clique(_g, c) || c.size() != clique_number())
                throw PreconditionError(_g.format(c) + " is not a maximum clique");

        long long common = gamma.intersection().size();
        long long all = gamma.union_of().size();
        long long twice_omega = 2LL * clique_number();
        bool direct = common >= twice_omega - all;

        // Same statement read in the complement: Γ is a family of maximum independent sets there.
        auto dual = complement_lab().check_collection_bound(gamma.with_kind(FamilyKind::maximum_independent));

        auto r = make_report(StatementId::HAJNAL, twice_omega, common + all, "<=", direct);
        r.note = "|∩Γ|=" + std::to_string(common) + " >= 2ω-|∪Γ|=" + std::to_string(twice_omega - all);
        if (dual.lhs != r.lhs || dual.rhs != r.rhs || dual.passed() != direct) {
            r.verdict = Verdict::failed;
            r.note += "; complement route disagrees (" + std::to_string(dual.lhs) + " <= " + std::to_string(dual.rhs) + ")";
        }
        r.witness = gamma;
        r.inputs_digest = digest({ }, &gamma);
        return r;
    }

    auto LemmaLab::check_berge(const VertexSet & x) -> CheckReport
    {
        require_independent(x, "X");

        // If S can be matched into X then so can every subset of S (restrict the
        // matching), so it suffices to test the maximal independent sets avoiding X.
        auto candidates = enumerate_maximal_independent_within(_g, x.complement(), _omega_cap);
        std::optional<VertexSet> blocked;
        std::optional<VertexSet> violator;
        for (auto & s : candidates.members()) {
            auto certificate = saturating_matching(_g, s, x);
            if (! certificate.saturating()) {
                blocked = s;
                violator = certificate.violator();
                break;
            }
        }

        bool condition = ! blocked;
        bool maximum = x.size() == alpha();
        auto r = make_report(StatementId::BERGE, x.size(), alpha(), "iff", condition == maximum);
        r.condition_bit = condition;
        if (blocked) {
            r.witness = *blocked;
            r.note = "S=" + _g.format(*blocked) + " cannot be matched into X; Hall violator " + _g.format(*violator);
        }
        else
            r.note = "all " + std::to_string(candidates.size()) + " maximal independent sets avoiding X match into X";
        r.inputs_digest = digest({ { "X", &x } });
        return r;
    }

    auto check_matching_lemma(const Graph & g, const VertexSet & s, const MisFamily & lambda, std::size_t x_index) -> std::array<CheckReport, 3>
    {
        return LemmaLab(g).check_matching_lemma(s, lambda, x_index);
    }

    auto check_set_collection(const Graph & g, const VertexSet & s, const MisFamily & lambda) -> CheckReport
    {
        return LemmaLab(g).check_set_collection(s, lambda);
    }

    auto demonstrate_necessity(const Graph & g, const VertexSet & s, const MisFamily & lambda) -> NecessityDemo
    {
        return LemmaLab(g).demonstrate_necessity(s, lambda);
    }

    auto check_collection_bound(const Graph & g, const MisFamily & lambda) -> CheckReport
    {
        return LemmaLab(g).check_collection_bound(lambda);
    }

    auto check_core_corona_bounds(const Graph & g) -> std::array<CheckReport, 2>
    {
        return LemmaLab(g).check_core_corona_bounds();
    }

    auto check_ke_equality(const Graph & g) -> CheckReport
    {
        return LemmaLab(g).check_ke_equality();
    }

    auto check_gitval(const Graph & g) -> CheckReport
    {
        return LemmaLab(g).check_gitval();
    }

    auto check_core_matching(const Graph & g, std::size_t s_index) -> CheckReport
    {
        return LemmaLab(g).check_core_matching(s_index);
    }

    auto check_hajnal(const Graph & g, const MisFamily & gamma) -> CheckReport
    {
        return LemmaLab(g).check_hajnal(gamma);
    }

    auto check_berge(const Graph & g, const VertexSet & x) -> CheckReport
    {
        return LemmaLab(g).check_berge(x);
    }

    auto revalidate_witness(const Graph & g, const CheckReport & report) -> std::optional<std::string>
    {
        if (auto m = std::get_if<Matching>(&report.witness)) {
            if (auto problem = validate_matching(g, *m))
                return problem;
            if (report.relation == "from-into" && (! m->saturates || m->saturates->size() != report.lhs))
                return "matching does not saturate a set of the reported size";
            return std::nullopt;
        }
        if (auto family = std::get_if<MisFamily>(&report.witness)) {
            if (family->universe() != g.order())
                return "family over the wrong vertex set";
            auto host = family->kind() == FamilyKind::maximum_clique ? complement(g) : g;
            int alpha = independence_number(host);
            for (auto & m : family->members())
                if (! is_independent(host, m) || m.size() != alpha)
                    return "family member " + g.format(m) + " is not maximum";
            return std::nullopt;
        }
        if (auto set = std::get_if<VertexSet>(&report.witness)) {
            if (set->universe() != g.order())
                return "witness set over the wrong vertex set";
            if (report.id == StatementId::BERGE) {
                auto x = digest_set(g, report, "X");
                if (! x)
                    return "cannot recover X from the inputs digest";
                if (! is_independent(g, *set) || set->intersects(*x))
                    return "blocked set is not an independent set avoiding X";
                if (saturating_matching(g, *set, *x).saturating())
                    return "blocked set can in fact be matched into X";
                return std::nullopt;
            }
            if (report.relation == "from-into") {
                auto sides = saturation_sides(g, report);
                if (! sides)
                    return "cannot recover the matching sides from the inputs digest";
                if (! set->is_subset_of(sides->first) || ! violates_hall(g, *set, sides->second))
                    return "set " + g.format(*set) + " is not a Hall violator";
                return std::nullopt;
            }
            return std::nullopt;
        }
        return std::nullopt;
    }

    auto all_independent_sets(const Graph & g) -> std::vector<VertexSet>
    {
        if (g.order() > 20)
            throw std::invalid_argument("all_independent_sets limited to 20 vertices");
        std::vector<VertexSet> result;
        auto walk = [&] (auto & self, VertexSet candidates, VertexSet current) -> void {
            result.push_back(current);
            for (Vertex v = candidates.first() ; v != -1 ; v = candidates.next(v)) {
                auto next = current;
                next.insert(v);
                auto rest = candidates - g.neighbours(v);
                // only vertices after v, so each set is produced once
                for (Vertex u = rest.first() ; u != -1 && u <= v ; u = rest.first())
                    rest.erase(u);
                self(self, rest, next);
            }
        };
        walk(walk, g.vertices(), g.empty_set());
        std::sort(result.begin(), result.end());
        return result;
    }

    auto run_theorem_suite(const Graph & g, const SuiteOptions & options) -> SuiteResult
    {
        SuiteResult result;
        auto wanted = [&] (StatementId id) {
            return options.statements.empty() || std::find(options.statements.begin(), options.statements.end(), id) != options.statements.end();
        };
        auto add = [&] (CheckReport r) {
            if (wanted(r.id))
                result.reports.push_back(std::move(r));
        };

        try {
            if (options.exhaustive && g.order() > 12)
                throw std::invalid_argument("exhaustive mode needs n <= 12");

            LemmaLab lab(g, options.omega_cap);
            const auto & omega = lab.omega();

            std::vector<MisFamily> lambdas{ options.lambda_override.value_or(omega) };
            if (options.vary_lambda && ! options.lambda_override) {
                lambdas.emplace_back(g.order(), FamilyKind::maximum_independent, std::vector<VertexSet>{ omega[0] });
                std::mt19937_64 rng(options.seed);
                std::vector<VertexSet> picked;
                for (auto & m : omega.members())
                    if (rng() & 1)
                        picked.push_back(m);
                if (picked.empty())
                    picked.push_back(omega[rng() % omega.size()]);
                lambdas.emplace_back(g.order(), FamilyKind::maximum_independent, std::move(picked));
            }

            std::vector<VertexSet> sets;
            if (options.exhaustive)
                sets = all_independent_sets(g);
            else {
                sets.push_back(g.empty_set());
                for (auto & m : omega.members())
                    sets.push_back(m);
            }
            for (auto & s : options.extra_sets)
                if (std::find(sets.begin(), sets.end(), s) == sets.end())
                    sets.push_back(s);

            bool need_ml = wanted(StatementId::ML_i) || wanted(StatementId::ML_ii) || wanted(StatementId::ML_iii);
            for (auto & lambda : lambdas) {
                if (wanted(StatementId::COR3))
                    add(lab.check_collection_bound(lambda));
                for (auto & s : sets) {
                    if (need_ml)
                        for (auto & r : lab.check_matching_lemma(s, lambda, 0))
                            add(std::move(r));
                    if (wanted(StatementId::SCL))
                        add(lab.check_set_collection(s, lambda));
                }
            }

            if (wanted(StatementId::COR2_core_corona) || wanted(StatementId::PROP2))
                for (auto & r : lab.check_core_corona_bounds())
                    add(std::move(r));
            if (wanted(StatementId::PROP1_KE))
                add(lab.check_ke_equality());
            if (wanted(StatementId::GITVAL))
                add(lab.check_gitval());
            if (wanted(StatementId::COR1_core_matching))
                for (std::size_t i = 0 ; i < omega.size() ; ++i)
                    add(lab.check_core_matching(i));

            if (wanted(StatementId::HAJNAL)) {
                auto cliques = enumerate_max_cliques(g, options.omega_cap);
                add(lab.check_hajnal(cliques));
                if (options.vary_lambda && cliques.size() > 1)
                    add(lab.check_hajnal(MisFamily(g.order(), FamilyKind::maximum_clique, { cliques[cliques.size() - 1] })));
            }

            if (wanted(StatementId::BERGE)) {
                std::vector<VertexSet> xs;
                if (options.exhaustive)
                    xs = sets;
                else {
                    xs.push_back(omega[0]);
                    xs.push_back(g.empty_set());
                    if (omega[0].size() >= 2) {
                        auto smaller = omega[0];
                        smaller.erase(smaller.first());
                        xs.push_back(smaller);
                    }
                }
                for (auto & x : xs)
                    add(lab.check_berge(x));
            }
        }
        catch (const CapOverflow & e) {
            result.error = std::string("cap overflow: ") + e.what();
        }
        catch (const std::invalid_argument & e) {
            result.error = e.what();
        }
        return result;
    }
}
