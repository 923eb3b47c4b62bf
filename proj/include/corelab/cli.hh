#pragma once

#include <corelab/lemmas.hh>
#include <corelab/report.hh>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace corelab
{
    /// Exit codes shared by every subcommand.
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_failure = 1,
        exit_usage = 2
    };

    struct CampaignSpec
    {
        int n_min = 8;
        int n_max = 12;
        std::vector<double> p_list{ 0.2, 0.5 };
        int count_per_cell = 100;
        std::uint64_t seed = 7;
        std::size_t omega_cap = default_omega_cap;
        std::size_t subset_cap = default_subset_cap;
        std::vector<StatementId> statements;
        /// Keep passing checks in the report too.
        bool full = false;
        /// 0 = hardware concurrency. Never affects the report.
        unsigned threads = 0;
    };

    auto campaign_spec_to_json(const CampaignSpec & spec) -> json;

    /// Generates count_per_cell Erdős–Rényi graphs for every (n, p) cell, runs the theorem
    /// suite with Λ varied over {Ω, first member, seeded random sub-collection}, and
    /// collects the report. Graph k of cell (n, p_i) uses seed derive_seed(seed, cell, k).
    auto run_campaign(const CampaignSpec & spec) -> RunReport;

    /// Entry point behind the corelab binary. args excludes the program name.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
