/* crosscheck.hh -- Randomized agreement suites between the fast paths, the
 * oracle and the structural characterizations.
 */

#ifndef SYNCRO_CLI_CROSSCHECK_HH_
#define SYNCRO_CLI_CROSSCHECK_HH_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syncro::cli {

struct CrosscheckOptions {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t nmax = 6;
};

struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<std::string> counterexample;  ///< automaton document of the first failure

    bool ok() const { return checked == passed; }
};

/// Throws std::invalid_argument unless 2 <= nmax <= the oracle cap.
std::vector<SuiteResult> crosscheck(const CrosscheckOptions& opt);

} // namespace syncro::cli

#endif // SYNCRO_CLI_CROSSCHECK_HH_
