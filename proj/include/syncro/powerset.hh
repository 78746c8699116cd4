/* powerset.hh -- The power automaton for synchronizing words: subset graph,
 * BFS depths, Nerode partition, exact state complexity of Syn(A), shortest
 * reset words and reachability questions.
 *
 * Subsets are encoded as bit masks (bit q = state q) and nodes live in flat
 * arrays, so every construction here is exponential in n and guarded by a cap.
 */

#ifndef SYNCRO_POWERSET_HH_
#define SYNCRO_POWERSET_HH_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syncro/core.hh"

namespace syncro {

using Mask = std::uint32_t;

inline constexpr unsigned kDefaultCap = 20;
inline constexpr unsigned kMaxCap = 24;

/// The automaton is too large for an explicit subset construction.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::size_t n, unsigned cap);
    std::size_t num_states() const { return n_; }
    unsigned cap() const { return cap_; }

private:
    std::size_t n_;
    unsigned cap_;
};

/// Throws CapExceeded when n > cap, std::invalid_argument when cap > kMaxCap.
void check_cap(std::size_t n, unsigned cap);

/// Rough bytes needed for a power automaton over n states and k letters.
std::uint64_t estimate_power_memory(std::size_t n, std::size_t k);

enum class PowerScope {
    reachable,    ///< BFS from Q.
    full,         ///< Every nonempty subset.
    up_to_pairs,  ///< Every subset of size 1 or 2 (closed under the letters).
};

/**
 * Image of subsets under single letters via byte lookup tables.
 */
class SubsetImager {
public:
    explicit SubsetImager(const SemiAutomaton& aut);
    Mask image(Mask subset, Letter a) const;

private:
    std::size_t k_;
    std::size_t chunks_;
    std::vector<Mask> table_;  // [letter][chunk][byte]
};

/**
 * Subset graph of a semi-automaton. For the reachable scope node 0 is Q and
 * nodes are in BFS discovery order (letters tried in index order), so the
 * BFS tree path to a node is the shortlex-least word reaching it. The other
 * scopes list their nodes in increasing encoding order.
 */
class PowerAutomaton {
public:
    static PowerAutomaton build(const SemiAutomaton& aut, PowerScope scope, unsigned cap = kDefaultCap);

    const SemiAutomaton& base() const { return base_; }
    PowerScope scope() const { return scope_; }
    std::size_t size() const { return nodes_.size(); }
    Mask node(std::size_t i) const { return nodes_[i]; }
    const std::vector<Mask>& nodes() const { return nodes_; }
    StateSet subset(std::size_t i) const;

    std::optional<std::size_t> index_of(Mask subset) const;
    bool contains(Mask subset) const { return index_of(subset).has_value(); }
    std::size_t successor(std::size_t i, Letter a) const { return succ_[i * base_.num_letters() + a]; }
    bool is_final(std::size_t i) const;

    /// BFS distance from Q; reachable scope only.
    std::optional<unsigned> depth(Mask subset) const;
    /// Shortlex-least word w with delta(Q, w) = subset; reachable scope only.
    std::optional<Word> word_to(Mask subset) const;

private:
    PowerAutomaton(SemiAutomaton base, PowerScope scope) : base_(std::move(base)), scope_(scope) {}

    SemiAutomaton base_;
    PowerScope scope_;
    std::vector<Mask> nodes_;
    std::vector<std::uint32_t> succ_;
    std::vector<std::int32_t> index_;  // mask -> node index, -1 if absent
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> parent_;
    std::vector<Letter> parent_letter_;
};

/**
 * Nerode classes of the subset nodes with respect to the singleton finals.
 * Class ids are numbered by the smallest subset encoding they contain.
 */
struct DistPartition {
    PowerAutomaton power;
    std::vector<std::uint32_t> class_id;  // per node index of power
    std::uint32_t num_classes = 0;

    std::optional<std::uint32_t> class_of(Mask subset) const;
    bool equivalent(Mask lhs, Mask rhs) const;
};

DistPartition dist_partition(PowerAutomaton power);
DistPartition dist_partition(const SemiAutomaton& aut, PowerScope scope, unsigned cap = kDefaultCap);

/// Size of the minimal complete DFA for Syn(A); 1 when Syn(A) is empty.
std::uint64_t syn_state_complexity(const SemiAutomaton& aut, unsigned cap = kDefaultCap);

/// 2^n - n.
std::uint64_t max_syn_state_complexity(std::size_t n);

/// Shortlex-least synchronizing word; nullopt when A is not synchronizing.
std::optional<Word> shortest_reset(const SemiAutomaton& aut, unsigned cap = kDefaultCap);

struct TwoSetResult {
    bool ok = false;
    std::optional<std::pair<StateSet, StateSet>> witness;  // an indistinguishable pair of 2-sets
};

TwoSetResult all_2sets_distinguishable(const SemiAutomaton& aut, unsigned cap = kDefaultCap);

struct ReachResult {
    bool ok = false;
    std::optional<StateSet> missing;  // smallest unreached subset (by size, then encoding)
};

ReachResult is_completely_reachable(const SemiAutomaton& aut, unsigned cap = kDefaultCap);
ReachResult is_completely_reachable(const PowerAutomaton& power);

/// Every subset of size @p level is reachable from Q.
bool k_level_reachable(const SemiAutomaton& aut, std::size_t level, unsigned cap = kDefaultCap);
bool k_level_reachable(const PowerAutomaton& power, std::size_t level);

using DepthBound = std::function<std::uint64_t(std::size_t n, std::size_t size)>;

/// n (n - size): the reachability word length bound for circular automata
/// with a suitable rank n-1 letter.
std::uint64_t don_depth_bound(std::size_t n, std::size_t size);

struct DepthCheck {
    bool ok = false;
    std::optional<StateSet> violator;
};

/// Requires complete reachability (std::domain_error otherwise).
DepthCheck reach_depth_bound_check(const SemiAutomaton& aut, const DepthBound& bound, unsigned cap = kDefaultCap);

namespace detail {

/**
 * Coarsest partition of a complete DFA's states compatible with
 * @p initial_block that is stable under all letters (Hopcroft).
 * @p succ is row-major [state][letter]. Returns block ids (not canonical).
 */
std::vector<std::uint32_t> refine_partition(std::size_t num_states, std::size_t num_letters,
                                            const std::vector<std::uint32_t>& succ,
                                            const std::vector<std::uint32_t>& initial_block);

} // namespace detail

} // namespace syncro

#endif // SYNCRO_POWERSET_HH_
