/* core.cc -- Semi-automata, words, state sets, transformations.
 */

#include "syncro/core.hh"

#include <algorithm>
#include <bit>
#include <queue>

namespace syncro {

// Word {{{

Word Word::operator+(const Word& other) const {
    std::vector<Letter> out = letters_;
    out.insert(out.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(out));
}

Word Word::repeat(std::size_t count) const {
    std::vector<Letter> out;
    out.reserve(letters_.size() * count);
    for (std::size_t i = 0; i < count; ++i) { out.insert(out.end(), letters_.begin(), letters_.end()); }
    return Word(std::move(out));
}

bool operator<(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) { return lhs.size() < rhs.size(); }
    return lhs.letters_ < rhs.letters_;
}

// }}}

// StateSet {{{

StateSet::StateSet(std::size_t num_states) : n_(num_states), bits_((num_states + 63) / 64, 0) {}

StateSet::StateSet(std::size_t num_states, std::initializer_list<State> states) : StateSet(num_states) {
    for (State q : states) { insert(q); }
}

StateSet StateSet::full(std::size_t num_states) {
    StateSet s(num_states);
    for (State q = 0; q < num_states; ++q) { s.insert(q); }
    return s;
}

StateSet StateSet::singleton(std::size_t num_states, State q) {
    StateSet s(num_states);
    s.insert(q);
    return s;
}

StateSet StateSet::from_mask(std::size_t num_states, std::uint64_t mask) {
    if (num_states > 64) { throw AutomatonError("from_mask: universe larger than 64 states"); }
    if (num_states < 64 && (mask >> num_states) != 0) {
        throw AutomatonError("from_mask: bits set outside the universe");
    }
    StateSet s(num_states);
    if (num_states > 0) { s.bits_[0] = mask; }
    return s;
}

bool StateSet::contains(State q) const {
    return q < n_ && ((bits_[q / 64] >> (q % 64)) & 1U) != 0;
}

void StateSet::insert(State q) {
    if (q >= n_) { throw AutomatonError("state " + std::to_string(q) + " outside [0, " + std::to_string(n_) + ")"); }
    bits_[q / 64] |= std::uint64_t{1} << (q % 64);
}

void StateSet::erase(State q) {
    if (q < n_) { bits_[q / 64] &= ~(std::uint64_t{1} << (q % 64)); }
}

std::size_t StateSet::count() const {
    std::size_t c = 0;
    for (auto word : bits_) { c += static_cast<std::size_t>(std::popcount(word)); }
    return c;
}

bool StateSet::is_subset_of(const StateSet& other) const {
    if (other.n_ != n_) { return false; }
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if ((bits_[i] & ~other.bits_[i]) != 0) { return false; }
    }
    return true;
}

std::vector<State> StateSet::states() const {
    std::vector<State> out;
    for (State q = 0; q < n_; ++q) {
        if (contains(q)) { out.push_back(q); }
    }
    return out;
}

std::uint64_t StateSet::to_mask() const {
    if (n_ > 64) { throw AutomatonError("to_mask: universe larger than 64 states"); }
    return bits_.empty() ? 0 : bits_[0];
}

std::string StateSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (State q : states()) {
        if (!first) { out += ','; }
        out += std::to_string(q);
        first = false;
    }
    return out + "}";
}

// }}}

// Transformation {{{

Transformation::Transformation(std::vector<State> image) : image_(std::move(image)) {
    for (State q : image_) {
        if (q >= image_.size()) {
            throw AutomatonError("transformation entry " + std::to_string(q) + " outside [0, " +
                                 std::to_string(image_.size()) + ")");
        }
    }
}

Transformation Transformation::identity(std::size_t n) {
    std::vector<State> image(n);
    for (State q = 0; q < n; ++q) { image[q] = q; }
    return Transformation(std::move(image));
}

std::size_t Transformation::rank() const {
    std::vector<bool> hit(image_.size(), false);
    std::size_t r = 0;
    for (State q : image_) {
        if (!hit[q]) {
            hit[q] = true;
            ++r;
        }
    }
    return r;
}

bool Transformation::is_cyclic() const {
    const std::size_t n = image_.size();
    if (n == 0 || !is_permutation()) { return false; }
    std::size_t len = 0;
    State q = 0;
    do {
        q = image_[q];
        ++len;
    } while (q != 0);
    return len == n;
}

std::vector<State> Transformation::missing() const {
    std::vector<bool> hit(image_.size(), false);
    for (State q : image_) { hit[q] = true; }
    std::vector<State> out;
    for (State q = 0; q < image_.size(); ++q) {
        if (!hit[q]) { out.push_back(q); }
    }
    return out;
}

std::vector<std::pair<State, State>> Transformation::kernel_pairs() const {
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < image_.size(); ++p) {
        for (State q = p + 1; q < image_.size(); ++q) {
            if (image_[p] == image_[q]) { out.emplace_back(p, q); }
        }
    }
    return out;
}

std::string Transformation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i > 0) { out += ','; }
        out += std::to_string(image_[i]);
    }
    return out + "]";
}

TransformationProps transformation_props(const Transformation& f) {
    return {f.rank(), f.is_permutation(), f.is_cyclic()};
}

Transformation compose(const Transformation& f, const Transformation& g) {
    if (f.degree() != g.degree()) {
        throw AutomatonError("compose: degree mismatch " + std::to_string(f.degree()) + " vs " +
                             std::to_string(g.degree()));
    }
    std::vector<State> image(f.degree());
    for (State q = 0; q < f.degree(); ++q) { image[q] = g(f(q)); }
    return Transformation(std::move(image));
}

// }}}

// SemiAutomaton {{{

std::vector<std::string> default_letter_names(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t a = 0; a < k; ++a) {
        names.push_back(a < 26 ? std::string(1, static_cast<char>('a' + a)) : "l" + std::to_string(a));
    }
    return names;
}

SemiAutomaton::SemiAutomaton(std::size_t num_states, std::size_t num_letters,
                             const std::vector<std::vector<State>>& delta, std::vector<std::string> letter_names)
    : n_(num_states), k_(num_letters), names_(std::move(letter_names)) {
    if (n_ == 0) { throw AutomatonError("automaton needs at least one state"); }
    if (k_ == 0) { throw AutomatonError("automaton needs at least one letter"); }
    if (delta.size() != n_) {
        throw AutomatonError("delta has " + std::to_string(delta.size()) + " rows, expected " + std::to_string(n_));
    }
    delta_.reserve(n_ * k_);
    for (std::size_t q = 0; q < n_; ++q) {
        if (delta[q].size() != k_) {
            throw AutomatonError("delta[" + std::to_string(q) + "] has " + std::to_string(delta[q].size()) +
                                 " entries, expected " + std::to_string(k_));
        }
        for (std::size_t a = 0; a < k_; ++a) {
            if (delta[q][a] >= n_) {
                throw AutomatonError("delta[" + std::to_string(q) + "][" + std::to_string(a) + "] = " +
                                     std::to_string(delta[q][a]) + " outside [0, " + std::to_string(n_) + ")");
            }
            delta_.push_back(delta[q][a]);
        }
    }
    if (names_.empty()) { names_ = default_letter_names(k_); }
    if (names_.size() != k_) {
        throw AutomatonError("got " + std::to_string(names_.size()) + " letter names for " + std::to_string(k_) +
                             " letters");
    }
    for (std::size_t a = 0; a < k_; ++a) {
        if (names_[a].empty()) { throw AutomatonError("empty letter name"); }
        for (std::size_t b = 0; b < a; ++b) {
            if (names_[a] == names_[b]) { throw AutomatonError("duplicate letter name '" + names_[a] + "'"); }
        }
    }
}

std::optional<Letter> SemiAutomaton::find_letter(std::string_view name) const {
    for (Letter a = 0; a < k_; ++a) {
        if (names_[a] == name) { return a; }
    }
    return std::nullopt;
}

std::vector<std::vector<State>> SemiAutomaton::table() const {
    std::vector<std::vector<State>> rows(n_, std::vector<State>(k_));
    for (std::size_t q = 0; q < n_; ++q) {
        for (std::size_t a = 0; a < k_; ++a) { rows[q][a] = delta_[q * k_ + a]; }
    }
    return rows;
}

Transformation SemiAutomaton::letter_action(Letter a) const {
    if (a >= k_) { throw AutomatonError("letter index " + std::to_string(a) + " outside alphabet"); }
    std::vector<State> image(n_);
    for (State q = 0; q < n_; ++q) { image[q] = next(q, a); }
    return Transformation(std::move(image));
}

void SemiAutomaton::check_word(const Word& w) const {
    for (Letter a : w) {
        if (a >= k_) {
            throw AutomatonError("letter index " + std::to_string(a) + " outside alphabet of size " +
                                 std::to_string(k_));
        }
    }
}

SemiAutomaton make_automaton(std::size_t n, std::size_t k, const std::vector<std::vector<State>>& delta,
                             std::vector<std::string> names) {
    return SemiAutomaton(n, k, delta, std::move(names));
}

// }}}

State apply_word(const SemiAutomaton& aut, State q, const Word& w) {
    aut.check_word(w);
    for (Letter a : w) { q = aut.next(q, a); }
    return q;
}

StateSet apply_word(const SemiAutomaton& aut, const StateSet& states, const Word& w) {
    aut.check_word(w);
    if (states.universe() != aut.num_states()) { throw AutomatonError("state set universe mismatch"); }
    const Transformation f = transformation_of(aut, w);
    StateSet out(aut.num_states());
    for (State q : states.states()) { out.insert(f(q)); }
    return out;
}

StateSet preimage_word(const SemiAutomaton& aut, const StateSet& states, const Word& w) {
    aut.check_word(w);
    if (states.universe() != aut.num_states()) { throw AutomatonError("state set universe mismatch"); }
    const Transformation f = transformation_of(aut, w);
    StateSet out(aut.num_states());
    for (State q = 0; q < aut.num_states(); ++q) {
        if (states.contains(f(q))) { out.insert(q); }
    }
    return out;
}

Transformation transformation_of(const SemiAutomaton& aut, const Word& w) {
    aut.check_word(w);
    std::vector<State> image(aut.num_states());
    for (State q = 0; q < aut.num_states(); ++q) {
        State p = q;
        for (Letter a : w) { p = aut.next(p, a); }
        image[q] = p;
    }
    return Transformation(std::move(image));
}

namespace {

std::vector<bool> reach_from(std::size_t n, State root, const std::vector<std::vector<State>>& adj) {
    std::vector<bool> seen(n, false);
    std::queue<State> todo;
    seen[root] = true;
    todo.push(root);
    while (!todo.empty()) {
        State q = todo.front();
        todo.pop();
        for (State p : adj[q]) {
            if (!seen[p]) {
                seen[p] = true;
                todo.push(p);
            }
        }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const SemiAutomaton& aut) {
    const std::size_t n = aut.num_states();
    std::vector<std::vector<State>> fwd(n), bwd(n);
    for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < aut.num_letters(); ++a) {
            fwd[q].push_back(aut.next(q, a));
            bwd[aut.next(q, a)].push_back(q);
        }
    }
    // Strongly connected iff state 0 reaches everything and everything reaches 0.
    auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
    return all(reach_from(n, 0, fwd)) && all(reach_from(n, 0, bwd));
}

namespace {

bool single_char_names(const SemiAutomaton& aut) {
    return std::all_of(aut.letter_names().begin(), aut.letter_names().end(),
                       [](const std::string& s) { return s.size() == 1; });
}

} // namespace

std::string format_word(const SemiAutomaton& aut, const Word& w) {
    if (w.empty()) { return "ε"; }
    const bool compact = single_char_names(aut);
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && !compact) { out += '.'; }
        out += aut.letter_name(w[i]);
    }
    return out;
}

std::string format_word_compact(const SemiAutomaton& aut, const Word& w) {
    if (w.empty()) { return "ε"; }
    const bool compact = single_char_names(aut);
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) { ++j; }
        if (!out.empty() && !compact) { out += '.'; }
        out += aut.letter_name(w[i]);
        if (j - i > 1) { out += "^" + std::to_string(j - i); }
        i = j;
    }
    return out;
}

Word parse_word(const SemiAutomaton& aut, std::string_view text) {
    if (text.empty() || text == "ε" || text == "eps") { return {}; }
    Word w;
    auto lookup = [&](std::string_view name) {
        auto a = aut.find_letter(name);
        if (!a) { throw AutomatonError("unknown letter '" + std::string(name) + "'"); }
        w.push_back(*a);
    };
    if (text.find('.') != std::string_view::npos || !single_char_names(aut)) {
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t dot = text.find('.', start);
            if (dot == std::string_view::npos) { dot = text.size(); }
            lookup(text.substr(start, dot - start));
            start = dot + 1;
        }
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) { lookup(text.substr(i, 1)); }
    }
    return w;
}

} // namespace syncro
