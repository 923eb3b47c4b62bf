#pragma once

#include <corelab/graph.hh>
#include <corelab/mis.hh>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corelab
{
    inline constexpr std::size_t default_subset_cap = 20;

    /// Where a graph sits with respect to 2α = |core| + |corona| and the known sufficient
    /// conditions for it.
    struct EqualityClassification
    {
        std::string graph_id;
        bool is_equality = false;
        bool is_ke = false;
        bool is_vwc = false;
        bool has_unique_mis = false;
        int alpha = 0;
        int core_size = 0;
        int corona_size = 0;
    };

    auto classify_equality(const Graph & g, std::string graph_id = "", std::size_t omega_cap = default_omega_cap) -> EqualityClassification;

    struct ScanRow
    {
        std::string graph_id;
        std::optional<EqualityClassification> classification;
        std::optional<std::string> error;
    };

    struct ScanSummary
    {
        std::size_t graphs = 0;
        std::size_t errors = 0;
        std::size_t equality = 0;
        std::size_t non_equality = 0;
        std::size_t ke = 0;
        std::size_t vwc = 0;
        std::size_t unique_mis = 0;
        /// Equality graphs covered by none of KE, very well-covered, unique maximum set.
        std::size_t unexplained_equality = 0;
        /// Keyed by "eq=1,ke=0,vwc=0,unique=1".
        std::map<std::string, std::size_t> combinations;
    };

    struct ScanResult
    {
        std::vector<ScanRow> rows;
        ScanSummary summary;
    };

    /// Classifies each graph; rows come back in input order and a failing graph becomes an
    /// error row without stopping the scan. Graph ids default to the 0-based position.
    /// threads == 0 uses the hardware concurrency.
    auto scan_equality(const std::vector<Graph> & graphs, std::size_t omega_cap = default_omega_cap,
            unsigned threads = 1, const std::vector<std::string> & ids = { }) -> ScanResult;

    class SubsetCapExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    struct EqualityCollectionResult
    {
        std::size_t max_size = 0;
        MisFamily witness;
        std::size_t omega_size = 0;
        bool exhaustive = true;
    };

    /// Largest Λ ⊆ Ω(G) with 2α = |∪Λ| + |∩Λ|, by exhaustive search over the non-empty
    /// sub-collections of Ω. Among the largest, the witness is the first in lexicographic
    /// order of member indices. Throws SubsetCapExceeded if |Ω| > subset_cap.
    auto largest_equality_collection(const Graph & g, std::size_t subset_cap = default_subset_cap,
            std::size_t omega_cap = default_omega_cap) -> EqualityCollectionResult;
}
