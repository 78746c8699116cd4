/* oracle.hh -- Slow, independent reference computations for cross-checking
 * the power automaton code, and seeded random automata.
 *
 * Nothing here shares code with powerset: subsets are sorted state lists in
 * ordered maps, and distinguishability is decided by table filling.
 */

#ifndef SYNCRO_ORACLE_HH_
#define SYNCRO_ORACLE_HH_

#include <cstddef>
#include <cstdint>
#include <random>

#include "syncro/core.hh"

namespace syncro {

inline constexpr std::size_t kOracleCap = 12;

/// Throws CapExceeded for n > kOracleCap.
std::uint64_t oracle_sc(const SemiAutomaton& aut);
bool oracle_complete_reachable(const SemiAutomaton& aut);
/// Any two distinct 2-sets are separated by some word in the product graph.
bool oracle_2set_distinguishable(const SemiAutomaton& aut);

using Rng = std::mt19937_64;

/// Generator for sample @p index under @p seed, independent of other samples.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Uniformly random transition table.
SemiAutomaton random_automaton(Rng& rng, std::size_t n, std::size_t k);

/// A random permutation of @p n states.
Transformation random_permutation(Rng& rng, std::size_t n);
/// A random single n-cycle.
Transformation random_cycle(Rng& rng, std::size_t n);
/// A random map of rank n-1 (n >= 2).
Transformation random_rank_deficient(Rng& rng, std::size_t n);

/// Binary: letter a of rank n-1, letter b a random n-cycle.
SemiAutomaton random_circular_binary(Rng& rng, std::size_t n);

/**
 * @p defects letters of rank n-1 followed by @p perms permutational letters.
 * The permutations move only a random subset of states, so both transitive
 * and intransitive groups come up.
 */
SemiAutomaton random_mixed(Rng& rng, std::size_t n, std::size_t defects, std::size_t perms);

SemiAutomaton from_transformations(const std::vector<Transformation>& letters);

} // namespace syncro

#endif // SYNCRO_ORACLE_HH_
