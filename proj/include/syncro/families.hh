/* families.hh -- Named automaton families with maximal state complexity of
 * their synchronizing words, plus two small worked examples.
 *
 * Letter a is index 0, letter b is index 1, and b always acts as the n-cycle
 * i -> i+1 mod n.
 */

#ifndef SYNCRO_FAMILIES_HH_
#define SYNCRO_FAMILIES_HH_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "syncro/core.hh"

namespace syncro {

enum class Family {
    cerny,        ///< a fixes everything except n-1 -> 0; n >= 2
    L,            ///< a shifts 0..n-3, n-2 -> 0, n-1 -> 1; n >= 3
    V,            ///< as L but n-1 -> 0; n >= 3
    F,            ///< a fixes everything except n-2 -> 0; odd n > 3
    K,            ///< a shifts 1..n-3, n-1 -> 0, n-2 -> 1, 0 -> 3; n > 5
    fig3,         ///< 4 states, a = [1,2,1,3]
    gc_footnote,  ///< 3 states, no cyclic letter but ba is a 3-cycle
};

struct FamilySpec {
    Family family;
    std::size_t n = 0;  ///< ignored by the fixed-size examples
};

const char* to_string(Family f);
/// Case-sensitive; also accepts "C" for cerny and "fig3"/"footnote" spellings.
std::optional<Family> parse_family(std::string_view name);

/// Fixed state count of the example automata, nullopt for size-indexed families.
std::optional<std::size_t> fixed_size(Family f);

/// Throws AutomatonError when the size constraint is violated.
SemiAutomaton build_family(const FamilySpec& spec);

} // namespace syncro

#endif // SYNCRO_FAMILIES_HH_
