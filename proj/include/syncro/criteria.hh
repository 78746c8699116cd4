/* criteria.hh -- Sufficient conditions for Syn(A) to reach the maximal state
 * complexity 2^n - n, and the verdict engine combining them with exact
 * reachability and distinguishability checks.
 *
 * All three checks certify that every 2-set of states is distinguishable in
 * the power automaton. Together with complete reachability this yields the
 * maximal state complexity. The checks are sufficient only: failing them
 * proves nothing.
 */

#ifndef SYNCRO_CRITERIA_HH_
#define SYNCRO_CRITERIA_HH_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syncro/core.hh"
#include "syncro/powerset.hh"

namespace syncro {

enum class EqCase {
    shift,           ///< delta(q, b^m a) = delta(q, a b^(n+m-d))
    image_shift,     ///< delta(q, a b^r) = delta(q, b^m a)
    back_shift,      ///< delta(q, b^m a b^r) = delta(q, a)
    half_cycle,      ///< delta(q, b^(m+1) a) = delta(q, a b^m)
};

const char* to_string(EqCase c);

struct MStep {
    std::size_t m;
    EqCase eq;
    std::optional<std::size_t> r;
};

struct CriterionWitness {
    State q = 0;
    std::size_t d = 1;
    std::size_t s_offset = 0;          ///< delta(q, a) = delta(q, b^s_offset)
    std::vector<MStep> per_m;
    std::optional<bool> boundary_holds; ///< corollary check only: the unrequired m = n-1 instance
};

struct CriterionResult {
    bool satisfied = false;
    std::optional<CriterionWitness> witness;
    std::string reason;  ///< empty when satisfied
    std::string detail;
};

namespace reason {
inline constexpr const char* kHypotheses = "hypotheses-violated";
inline constexpr const char* kDistanceNotCoprime = "distance-not-coprime";
inline constexpr const char* kNoWitness = "no-witness";
} // namespace reason

/**
 * Searches q and 0 < d < n, gcd(d, n) = 1, such that every 0 < m < n is
 * covered by the shift equation or (only when d does not divide m) by one of
 * the two r-equations with 0 <= r < n, d | r. @p b must act as a single
 * n-cycle and @p a must have rank n-1. Smallest q, then d, then r wins.
 */
CriterionResult theorem1_check(const SemiAutomaton& aut, const Word& a, const Word& b);

/**
 * delta(q, b^(m+1) w) = delta(q, w b^m) for all 0 <= m <= n-2; the d = 1
 * instance of theorem1_check.
 */
CriterionResult corollary_word_check(const SemiAutomaton& aut, const Word& w, const Word& b);

/**
 * delta(q, b^(m+1) a) = delta(q, a b^m) for 0 <= m <= floor(n/2) - 1.
 */
CriterionResult half_cycle_check(const SemiAutomaton& aut, const Word& a, const Word& b);

struct RankWord {
    Word word;
    Transformation transformation;
};

/// The transformation monoid outgrew the enumeration budget.
class MonoidTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * One shortlex-least word per distinct transformation of rank
 * @p target_rank among words of length <= @p max_len (0 means 2n + 2).
 * Throws MonoidTooLarge once more than @p max_elements transformations
 * have been seen.
 */
std::vector<RankWord> enumerate_rank_words(const SemiAutomaton& aut, std::size_t target_rank, std::size_t max_len = 0,
                                           std::size_t max_elements = std::size_t{1} << 20);

enum class MaxSc { proved, refuted, unknown };

const char* to_string(MaxSc v);

struct JustificationStep {
    std::string rule;   ///< "don", "reachability", "theorem1", "half-cycle", "oracle-2sets", "lemma1", ...
    bool holds = false;
    std::string detail;
};

struct Verdict {
    std::optional<std::uint64_t> sc_claimed;
    MaxSc max_sc = MaxSc::unknown;
    std::vector<JustificationStep> justification;
    bool oracle_used = false;

    /// Steps that hold, in order.
    std::vector<JustificationStep> fired() const;
};

struct VerdictBudget {
    std::size_t word_len = 0;  ///< 0 means 2n + 2
    bool use_oracle = false;
    unsigned cap = kDefaultCap;
};

Verdict verdict(const SemiAutomaton& aut, const VerdictBudget& budget = {});

} // namespace syncro

#endif // SYNCRO_CRITERIA_HH_
