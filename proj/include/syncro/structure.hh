/* structure.hh -- Structural analyses: rank profiles, orbits of the group
 * generated by permutational letters, (n-1)-level reachability criteria,
 * binary-alphabet structure, cyclic words and the complete reachability
 * certificate for circular automata.
 */

#ifndef SYNCRO_STRUCTURE_HH_
#define SYNCRO_STRUCTURE_HH_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "syncro/core.hh"
#include "syncro/powerset.hh"

namespace syncro {

/// A letter of rank n-1.
struct DefectLetter {
    Letter letter;
    State excluded;                    ///< the state outside the image
    std::pair<State, State> collapsed; ///< the unique 2-set with a common image, first < second
    State merged;                      ///< the common image of the collapsed pair
};

struct RankProfile {
    std::vector<std::size_t> rank;     ///< per letter
    std::vector<Letter> permutational; ///< letters of rank n
    std::vector<DefectLetter> defects; ///< letters of rank n-1

    std::size_t num_defects() const { return defects.size(); }
};

RankProfile rank_profile(const SemiAutomaton& aut);

struct StructReport {
    /// Orbits of the group generated by the permutational letters, each sorted,
    /// listed by smallest member.
    std::vector<std::vector<State>> orbits;
    bool group_nontrivial = false;
    bool group_transitive = false;
    /// Every state shares an orbit with the excluded state of some rank n-1 letter.
    bool covered_by_excluded = false;
    /// At least one rank n-1 letter, a nontrivial group and the covering holds.
    bool condition = false;
    /// Fewer rank n-1 letters than states.
    bool applicable = false;
};

StructReport orbit_analysis(const SemiAutomaton& aut);

struct Prop1Result {
    bool applicable = false;
    bool structural = false;
    bool reachable_n_minus_1 = false;
};

/// Structural condition vs. reachability of every (n-1)-subset. The two
/// coincide whenever applicable (m < n).
Prop1Result prop1_equivalence(const SemiAutomaton& aut, unsigned cap = kDefaultCap);

struct BinaryStructure {
    bool applicable = false;  ///< n > 2
    bool ok = false;
    std::optional<Letter> cyclic_letter;
    std::optional<Letter> defect_letter;
};

/// Requires exactly two letters (AutomatonError otherwise).
BinaryStructure binary_structure(const SemiAutomaton& aut);

/// First letter acting as a single n-cycle.
std::optional<Letter> find_cyclic_letter(const SemiAutomaton& aut);
inline bool is_circular(const SemiAutomaton& aut) { return find_cyclic_letter(aut).has_value(); }

/**
 * Shortest word acting as a single n-cycle, searched over words of
 * permutational letters up to @p max_len (0 means n^2). Among shortest words
 * the colexicographically least one (compared from the last letter) wins.
 */
std::optional<Word> find_cyclic_word(const SemiAutomaton& aut, std::size_t max_len = 0);

struct DonWitness {
    Letter a;      ///< rank n-1 letter
    Letter b;      ///< cyclic letter
    State s;       ///< excluded state of a
    State t;       ///< doubly covered state of a
    std::size_t d; ///< delta(s, b^d) = t
};

/// Complete reachability certificate for circular automata: returns a
/// witness iff some pair qualifies with gcd(d, n) = 1. First pair in (a, b)
/// order wins.
std::optional<DonWitness> don_precondition(const SemiAutomaton& aut);

} // namespace syncro

#endif // SYNCRO_STRUCTURE_HH_
