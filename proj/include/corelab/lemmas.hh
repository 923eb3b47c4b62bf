#pragma once

#include <corelab/graph.hh>
#include <corelab/matching.hh>
#include <corelab/mis.hh>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace corelab
{
    /// The statements that have a checker.
    enum class StatementId
    {
        ML_i,               // matching from S - ∩Λ into ∪Λ - S
        ML_ii,              // matching from S - X into X - S
        ML_iii,             // matching from S∩X - ∩Λ into ∪Λ - (X ∪ S)
        SCL,                // |S| + α ≤ |∩Λ ∩ S| + |∪Λ ∪ S|
        COR3,               // 2α ≤ |∩Λ| + |∪Λ|
        COR2_core_corona,   // 2α ≤ |core| + |corona|
        PROP2,              // |core| + |corona| ≤ α + |V| - 1 when E ≠ ∅
        PROP1_KE,           // König-Egerváry ⇒ 2α = |core| + |corona|
        GITVAL,             // α - |core| ≤ τ - |∩{V - S}|
        COR1_core_matching, // matching from S - core into corona - S, S ∈ Ω
        HAJNAL,             // |∩Γ| ≥ 2ω - |∪Γ| for maximum cliques Γ
        BERGE               // X maximum ⇔ every independent S disjoint from X matches into X
    };

    inline constexpr std::array all_statements{
        StatementId::ML_i, StatementId::ML_ii, StatementId::ML_iii, StatementId::SCL, StatementId::COR3,
        StatementId::COR2_core_corona, StatementId::PROP2, StatementId::PROP1_KE, StatementId::GITVAL,
        StatementId::COR1_core_matching, StatementId::HAJNAL, StatementId::BERGE };

    auto to_string(StatementId id) -> std::string;
    /// Throws std::invalid_argument for an unknown name.
    auto parse_statement_id(const std::string & name) -> StatementId;

    enum class Verdict
    {
        passed,
        failed,
        skipped
    };

    auto to_string(Verdict v) -> std::string;

    using Witness = std::variant<std::monostate, Matching, MisFamily, VertexSet>;

    struct CheckReport
    {
        StatementId id = StatementId::ML_i;
        Verdict verdict = Verdict::failed;
        long long lhs = 0;
        long long rhs = 0;
        /// How lhs relates to rhs: "<=", ">=", "==", "from-into" (lhs = |A|, rhs = |B|,
        /// holds when A can be saturated), "implies", "iff".
        std::string relation;
        Witness witness;
        /// PROP1_KE: whether 2α = |core| + |corona| holds (regardless of the KE premise).
        std::optional<bool> equality_bit;
        /// PROP1_KE: the KE premise. BERGE: the matchability condition.
        std::optional<bool> condition_bit;
        /// Canonical text of the inputs (graph6 plus the sets involved).
        std::string inputs_digest;
        std::string note;

        [[nodiscard]] auto passed() const -> bool { return verdict == Verdict::passed; }
    };

    /// Raised when a checker's hypotheses do not hold (S not independent, Λ not a
    /// family of maximum independent sets, ...). Distinct from a failed check.
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// Outcome of evaluating the matching and the inequality on inputs that are allowed
    /// to fall outside the hypotheses. Carries no verdict.
    struct NecessityDemo
    {
        bool family_is_maximum = false;
        HallCertificate part_i;
        long long set_plus_alpha = 0;   // |S| + α(G)
        long long twice_set = 0;        // 2|S|, a lower bound for |S| + α(G)
        long long rhs = 0;              // |∩Λ ∩ S| + |∪Λ ∪ S|
        VertexSet from;                 // S - ∩Λ
        VertexSet into;                 // ∪Λ - S

        [[nodiscard]] auto inequality_holds() const -> bool { return set_plus_alpha <= rhs; }
        [[nodiscard]] auto doubled_inequality_holds() const -> bool { return twice_set <= rhs; }
    };

    /// Runs checkers against one graph, caching α, Ω(G), core/corona and μ between calls.
    class LemmaLab
    {
        public:
            explicit LemmaLab(Graph g, std::size_t omega_cap = default_omega_cap);
            ~LemmaLab();
            LemmaLab(LemmaLab &&) noexcept;

            [[nodiscard]] auto graph() const -> const Graph & { return _g; }
            auto alpha() -> int;
            /// Throws CapOverflow.
            auto omega() -> const MisFamily &;
            auto core_corona() -> const CoreCorona &;
            auto matching_number() -> int;
            auto clique_number() -> int;

            auto check_matching_lemma(const VertexSet & s, const MisFamily & lambda, std::size_t x_index) -> std::array<CheckReport, 3>;
            auto check_set_collection(const VertexSet & s, const MisFamily & lambda) -> CheckReport;
            auto demonstrate_necessity(const VertexSet & s, const MisFamily & lambda) -> NecessityDemo;
            auto check_collection_bound(const MisFamily & lambda) -> CheckReport;
            /// { COR2_core_corona, PROP2 }; PROP2 is skipped on edgeless graphs.
            auto check_core_corona_bounds() -> std::array<CheckReport, 2>;
            auto check_ke_equality() -> CheckReport;
            auto check_gitval() -> CheckReport;
            auto check_core_matching(std::size_t s_index) -> CheckReport;
            auto check_hajnal(const MisFamily & gamma) -> CheckReport;
            auto check_berge(const VertexSet & x) -> CheckReport;

        private:
            Graph _g;
            std::size_t _omega_cap;
            std::optional<int> _alpha, _mu, _omega_number;
            std::optional<MisFamily> _omega;
            std::optional<CoreCorona> _core_corona;
            std::unique_ptr<LemmaLab> _complement;

            auto complement_lab() -> LemmaLab &;
            auto require_independent(const VertexSet & s, const char * name) -> void;
            auto require_maximum_family(const MisFamily & lambda) -> void;
            auto digest(std::initializer_list<std::pair<const char *, const VertexSet *>> sets,
                    const MisFamily * family = nullptr) const -> std::string;
            auto saturation_report(StatementId id, const VertexSet & a, const VertexSet & b, std::string digest) -> CheckReport;
    };

    // One-shot forms of the LemmaLab checkers.
    auto check_matching_lemma(const Graph & g, const VertexSet & s, const MisFamily & lambda, std::size_t x_index) -> std::array<CheckReport, 3>;
    auto check_set_collection(const Graph & g, const VertexSet & s, const MisFamily & lambda) -> CheckReport;
    auto demonstrate_necessity(const Graph & g, const VertexSet & s, const MisFamily & lambda) -> NecessityDemo;
    auto check_collection_bound(const Graph & g, const MisFamily & lambda) -> CheckReport;
    auto check_core_corona_bounds(const Graph & g) -> std::array<CheckReport, 2>;
    auto check_ke_equality(const Graph & g) -> CheckReport;
    auto check_gitval(const Graph & g) -> CheckReport;
    auto check_core_matching(const Graph & g, std::size_t s_index) -> CheckReport;
    auto check_hajnal(const Graph & g, const MisFamily & gamma) -> CheckReport;
    auto check_berge(const Graph & g, const VertexSet & x) -> CheckReport;

    /// Re-checks a report's witness against the graph: a matching must be valid and
    /// saturate its claimed side, a Hall violator must violate, a family must consist of
    /// maximum independent sets. Empty optional means the witness holds up.
    auto revalidate_witness(const Graph & g, const CheckReport & report) -> std::optional<std::string>;

    struct SuiteOptions
    {
        std::size_t omega_cap = default_omega_cap;
        /// Empty means every statement.
        std::vector<StatementId> statements;
        /// Also try Λ = {first member} and one seeded random sub-collection.
        bool vary_lambda = false;
        /// Let S (and Berge's X) range over every independent set; only for n ≤ 12.
        bool exhaustive = false;
        std::uint64_t seed = 0;
        /// Additional independent sets S to test.
        std::vector<VertexSet> extra_sets;
        /// Replaces Λ = Ω(G) (and its variants) for the Matching Lemma, SCL and COR3 checks.
        std::optional<MisFamily> lambda_override;
    };

    struct SuiteResult
    {
        std::vector<CheckReport> reports;
        /// Set when the graph could not be processed (cap overflow, bad options).
        std::optional<std::string> error;
    };

    /// The full battery on one graph: S over Ω(G) ∪ {∅}, Λ = Ω(G) (plus variants), X the
    /// first member of Λ; Berge on the first maximum set, ∅, and a non-maximum
    /// independent set.
    auto run_theorem_suite(const Graph & g, const SuiteOptions & options) -> SuiteResult;

    /// Every independent set of g in canonical order; n must be at most 20.
    auto all_independent_sets(const Graph & g) -> std::vector<VertexSet>;
}
