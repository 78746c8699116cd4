/* report.hh -- The analysis report behind `analyze` and `family`.
 */

#ifndef SYNCRO_CLI_REPORT_HH_
#define SYNCRO_CLI_REPORT_HH_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "syncro/criteria.hh"

namespace syncro::cli {

struct AnalyzeOptions {
    bool oracle = false;
    std::size_t word_budget = 0;  ///< 0 means 2n + 2
    unsigned cap = kDefaultCap;
    bool timings = false;
};

struct LetterInfo {
    std::string name;
    Transformation action;
};

struct CriterionTrace {
    std::string check;  ///< theorem1, corollary, half-cycle
    std::string a;
    std::string b;
    CriterionResult result;
};

struct Report {
    std::string name;
    std::size_t n = 0;
    std::vector<LetterInfo> letters;
    bool strongly_connected = false;

    std::string circular_kind;  ///< letter, word, none-within-budget
    std::string circular_witness;

    std::optional<bool> reachable;
    std::string reach_certificate;  ///< don, exact, none
    std::string reach_detail;

    std::optional<std::uint64_t> sc;
    std::string sc_kind;  ///< exact, proved, bound-only

    bool reset_known = false;
    std::optional<std::string> shortest_reset;  ///< nullopt with reset_known: not synchronizing
    std::size_t reset_length = 0;

    std::vector<CriterionTrace> criteria;
    Verdict verdict;
    std::vector<std::pair<std::string, double>> timings_ms;
};

Report analyze(const SemiAutomaton& aut, const std::string& name, const AnalyzeOptions& opt);

nlohmann::ordered_json report_json(const Report& rep);
std::string report_text(const Report& rep);

nlohmann::ordered_json criterion_json(const CriterionResult& res);

} // namespace syncro::cli

#endif // SYNCRO_CLI_REPORT_HH_
