/* dot.hh -- Graphviz renderings of an automaton and its power automaton.
 */

#ifndef SYNCRO_CLI_DOT_HH_
#define SYNCRO_CLI_DOT_HH_

#include <string>

#include "syncro/powerset.hh"

namespace syncro::cli {

/// One node per state, one edge per (state, letter).
std::string automaton_dot(const SemiAutomaton& aut, const std::string& name);

/// Reachable subsets in BFS order, labelled "{0,2}"; singletons double-circled.
std::string power_dot(const SemiAutomaton& aut, const std::string& name, unsigned cap = kDefaultCap);

} // namespace syncro::cli

#endif // SYNCRO_CLI_DOT_HH_
