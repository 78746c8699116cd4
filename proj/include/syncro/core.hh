/* core.hh -- Deterministic complete semi-automata, words, state sets and
 * the transformations words induce on the states.
 */

#ifndef SYNCRO_CORE_HH_
#define SYNCRO_CORE_HH_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace syncro {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Raised for malformed automata, words or state sets.
class AutomatonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A finite word over letter indices. The empty word is the monoid identity.
 */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}

    /// The word consisting of @p count copies of @p letter.
    static Word power(Letter letter, std::size_t count) { return Word(std::vector<Letter>(count, letter)); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    std::span<const Letter> letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter a) { letters_.push_back(a); }

    /// Concatenation: read this word first, then @p other.
    Word operator+(const Word& other) const;
    /// The word repeated @p count times.
    Word repeat(std::size_t count) const;

    friend bool operator==(const Word&, const Word&) = default;
    /// Shortlex order: shorter first, then lexicographic by letter index.
    friend bool operator<(const Word& lhs, const Word& rhs);

private:
    std::vector<Letter> letters_;
};

/**
 * A subset of the states {0, ..., n-1}, stored as a bit vector.
 */
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t num_states);
    StateSet(std::size_t num_states, std::initializer_list<State> states);

    static StateSet full(std::size_t num_states);
    static StateSet singleton(std::size_t num_states, State q);
    /// Bit i of @p mask is state i. Requires num_states <= 64.
    static StateSet from_mask(std::size_t num_states, std::uint64_t mask);

    std::size_t universe() const { return n_; }
    bool contains(State q) const;
    void insert(State q);
    void erase(State q);
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    bool is_subset_of(const StateSet& other) const;

    /// Members in increasing order.
    std::vector<State> states() const;
    /// Requires universe() <= 64.
    std::uint64_t to_mask() const;

    /// "{0,2}" with members ascending; "{}" for the empty set.
    std::string to_string() const;

    friend bool operator==(const StateSet&, const StateSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> bits_;
};

/**
 * A total map on {0, ..., n-1}; image[q] is the target of q.
 */
class Transformation {
public:
    Transformation() = default;
    explicit Transformation(std::vector<State> image);

    static Transformation identity(std::size_t n);

    std::size_t degree() const { return image_.size(); }
    State operator()(State q) const { return image_[q]; }
    State operator[](State q) const { return image_[q]; }
    std::span<const State> image() const { return image_; }

    /// Cardinality of the image set.
    std::size_t rank() const;
    bool is_permutation() const { return rank() == degree(); }
    /// A permutation with a single cycle of length n.
    bool is_cyclic() const;
    /// States not hit by the map, ascending.
    std::vector<State> missing() const;
    /// Pairs {p, q}, p < q, with the same image, ascending.
    std::vector<std::pair<State, State>> kernel_pairs() const;

    std::string to_string() const;

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation& lhs, const Transformation& rhs) {
        return lhs.image_ <=> rhs.image_;
    }

private:
    std::vector<State> image_;
};

struct TransformationProps {
    std::size_t rank;
    bool is_permutation;
    bool is_cyclic;
};

TransformationProps transformation_props(const Transformation& f);

/// @p f first, then @p g: compose(f, g)(q) = g(f(q)).
Transformation compose(const Transformation& f, const Transformation& g);

/**
 * A deterministic complete semi-automaton (Sigma, Q, delta) with
 * Q = {0, ..., n-1} and letters {0, ..., k-1}.
 */
class SemiAutomaton {
public:
    /// @p delta is indexed delta[state][letter].
    SemiAutomaton(std::size_t num_states, std::size_t num_letters,
                  const std::vector<std::vector<State>>& delta,
                  std::vector<std::string> letter_names = {});

    std::size_t num_states() const { return n_; }
    std::size_t num_letters() const { return k_; }
    State next(State q, Letter a) const { return delta_[q * k_ + a]; }

    const std::string& letter_name(Letter a) const { return names_[a]; }
    const std::vector<std::string>& letter_names() const { return names_; }
    std::optional<Letter> find_letter(std::string_view name) const;

    /// delta as nested rows, delta[state][letter].
    std::vector<std::vector<State>> table() const;
    /// The transformation induced by a single letter.
    Transformation letter_action(Letter a) const;

    /// Throws AutomatonError if some letter of @p w is not in the alphabet.
    void check_word(const Word& w) const;

    friend bool operator==(const SemiAutomaton&, const SemiAutomaton&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<State> delta_;
    std::vector<std::string> names_;
};

/// Validating constructor; see SemiAutomaton.
SemiAutomaton make_automaton(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& delta,
                             std::vector<std::string> names = {});

/// Default display names: a, b, ..., z, then l26, l27, ...
std::vector<std::string> default_letter_names(std::size_t k);

/// delta(S, w), letter by letter left to right.
StateSet apply_word(const SemiAutomaton& aut, const StateSet& states, const Word& w);
/// delta^{-1}(S, w) = { q | delta(q, w) in S }.
StateSet preimage_word(const SemiAutomaton& aut, const StateSet& states, const Word& w);
/// q -> delta(q, w).
Transformation transformation_of(const SemiAutomaton& aut, const Word& w);
State apply_word(const SemiAutomaton& aut, State q, const Word& w);

/// Every state reachable from every other state in the transition digraph.
bool is_strongly_connected(const SemiAutomaton& aut);

/// Renders @p w with letter names, "ε" for the empty word. Single-character
/// names are concatenated, longer ones separated by '.'.
std::string format_word(const SemiAutomaton& aut, const Word& w);
/// Like format_word but collapses runs, e.g. "b^2a".
std::string format_word_compact(const SemiAutomaton& aut, const Word& w);
/// Inverse of format_word. Accepts "", "ε" and "eps" for the empty word.
Word parse_word(const SemiAutomaton& aut, std::string_view text);

} // namespace syncro

#endif // SYNCRO_CORE_HH_
