/* powerset.cc -- Subset construction, Hopcroft refinement and the questions
 * answered on top of them.
 */

#include "syncro/powerset.hh"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace syncro {

CapExceeded::CapExceeded(std::size_t n, unsigned cap)
    : std::runtime_error("power automaton over " + std::to_string(n) + " states exceeds the cap of " +
                         std::to_string(cap) + " states"),
      n_(n), cap_(cap) {}

void check_cap(std::size_t n, unsigned cap) {
    if (cap > kMaxCap) {
        throw std::invalid_argument("cap " + std::to_string(cap) + " exceeds the hard maximum of " +
                                    std::to_string(kMaxCap));
    }
    if (n > cap) { throw CapExceeded(n, cap); }
}

std::uint64_t estimate_power_memory(std::size_t n, std::size_t k) {
    const std::uint64_t nodes = std::uint64_t{1} << n;
    // index + node + depth + parent + parent letter + k successors, 4 bytes each
    return nodes * (4 * (5 + k));
}

// SubsetImager {{{

SubsetImager::SubsetImager(const SemiAutomaton& aut)
    : k_(aut.num_letters()), chunks_((aut.num_states() + 7) / 8), table_(k_ * chunks_ * 256, 0) {
    const std::size_t n = aut.num_states();
    for (Letter a = 0; a < k_; ++a) {
        for (std::size_t c = 0; c < chunks_; ++c) {
            Mask* row = &table_[(a * chunks_ + c) * 256];
            for (unsigned byte = 1; byte < 256; ++byte) {
                Mask img = 0;
                for (unsigned bit = 0; bit < 8; ++bit) {
                    const std::size_t q = 8 * c + bit;
                    if (q < n && ((byte >> bit) & 1U) != 0) {
                        img |= Mask{1} << aut.next(static_cast<State>(q), a);
                    }
                }
                row[byte] = img;
            }
        }
    }
}

Mask SubsetImager::image(Mask subset, Letter a) const {
    const Mask* base = &table_[a * chunks_ * 256];
    Mask img = 0;
    for (std::size_t c = 0; c < chunks_; ++c) { img |= base[c * 256 + ((subset >> (8 * c)) & 0xFFU)]; }
    return img;
}

// }}}

// PowerAutomaton {{{

namespace {

unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

Mask full_mask(std::size_t n) { return static_cast<Mask>((std::uint64_t{1} << n) - 1); }

} // namespace

PowerAutomaton PowerAutomaton::build(const SemiAutomaton& aut, PowerScope scope, unsigned cap) {
    check_cap(aut.num_states(), cap);
    PowerAutomaton p(aut, scope);
    const std::size_t n = aut.num_states();
    const std::size_t k = aut.num_letters();
    const SubsetImager imager(aut);
    const Mask full = full_mask(n);

    switch (scope) {
    case PowerScope::reachable: {
        p.index_.assign(std::size_t{1} << n, -1);
        p.nodes_.push_back(full);
        p.index_[full] = 0;
        p.depth_.push_back(0);
        p.parent_.push_back(0);
        p.parent_letter_.push_back(0);
        for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
            const Mask s = p.nodes_[i];
            for (Letter a = 0; a < k; ++a) {
                const Mask t = imager.image(s, a);
                std::int32_t& slot = p.index_[t];
                if (slot < 0) {
                    slot = static_cast<std::int32_t>(p.nodes_.size());
                    p.nodes_.push_back(t);
                    p.depth_.push_back(p.depth_[i] + 1);
                    p.parent_.push_back(static_cast<std::uint32_t>(i));
                    p.parent_letter_.push_back(a);
                }
                p.succ_.push_back(static_cast<std::uint32_t>(slot));
            }
        }
        break;
    }
    case PowerScope::full: {
        const std::size_t count = full;
        p.nodes_.resize(count);
        p.succ_.resize(count * k);
        for (std::size_t i = 0; i < count; ++i) {
            const Mask s = static_cast<Mask>(i + 1);
            p.nodes_[i] = s;
            for (Letter a = 0; a < k; ++a) { p.succ_[i * k + a] = imager.image(s, a) - 1; }
        }
        break;
    }
    case PowerScope::up_to_pairs: {
        for (std::size_t i = 0; i < n; ++i) {
            p.nodes_.push_back(Mask{1} << i);
            for (std::size_t j = i + 1; j < n; ++j) { p.nodes_.push_back((Mask{1} << i) | (Mask{1} << j)); }
        }
        std::sort(p.nodes_.begin(), p.nodes_.end());
        p.succ_.resize(p.nodes_.size() * k);
        for (std::size_t i = 0; i < p.nodes_.size(); ++i) {
            for (Letter a = 0; a < k; ++a) {
                p.succ_[i * k + a] = static_cast<std::uint32_t>(*p.index_of(imager.image(p.nodes_[i], a)));
            }
        }
        break;
    }
    }
    return p;
}

StateSet PowerAutomaton::subset(std::size_t i) const { return StateSet::from_mask(base_.num_states(), nodes_[i]); }

std::optional<std::size_t> PowerAutomaton::index_of(Mask subset) const {
    const Mask full = full_mask(base_.num_states());
    if (subset == 0 || (subset & ~full) != 0) { return std::nullopt; }
    switch (scope_) {
    case PowerScope::reachable: {
        const std::int32_t i = index_[subset];
        if (i < 0) { return std::nullopt; }
        return static_cast<std::size_t>(i);
    }
    case PowerScope::full:
        return static_cast<std::size_t>(subset - 1);
    case PowerScope::up_to_pairs: {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), subset);
        if (it == nodes_.end() || *it != subset) { return std::nullopt; }
        return static_cast<std::size_t>(it - nodes_.begin());
    }
    }
    return std::nullopt;
}

bool PowerAutomaton::is_final(std::size_t i) const { return popcount(nodes_[i]) == 1; }

std::optional<unsigned> PowerAutomaton::depth(Mask subset) const {
    if (scope_ != PowerScope::reachable) { return std::nullopt; }
    auto i = index_of(subset);
    if (!i) { return std::nullopt; }
    return depth_[*i];
}

std::optional<Word> PowerAutomaton::word_to(Mask subset) const {
    if (scope_ != PowerScope::reachable) { return std::nullopt; }
    auto i = index_of(subset);
    if (!i) { return std::nullopt; }
    std::vector<Letter> rev;
    for (std::size_t v = *i; v != 0; v = parent_[v]) { rev.push_back(parent_letter_[v]); }
    return Word(std::vector<Letter>(rev.rbegin(), rev.rend()));
}

// }}}

// Hopcroft refinement {{{

namespace detail {

std::vector<std::uint32_t> refine_partition(std::size_t num_states, std::size_t num_letters,
                                            const std::vector<std::uint32_t>& succ,
                                            const std::vector<std::uint32_t>& initial_block) {
    const std::size_t n = num_states;
    const std::size_t k = num_letters;
    if (n == 0) { return {}; }

    // Inverse transitions, one CSR slab per letter.
    std::vector<std::uint32_t> inv_start(k * (n + 1), 0);
    std::vector<std::uint32_t> inv(n * k);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t a = 0; a < k; ++a) { ++inv_start[a * (n + 1) + succ[s * k + a] + 1]; }
    }
    for (std::size_t a = 0; a < k; ++a) {
        std::uint32_t* row = &inv_start[a * (n + 1)];
        for (std::size_t t = 0; t < n; ++t) { row[t + 1] += row[t]; }
    }
    {
        std::vector<std::uint32_t> fill(inv_start);
        for (std::size_t s = 0; s < n; ++s) {
            for (std::size_t a = 0; a < k; ++a) {
                const std::uint32_t t = succ[s * k + a];
                inv[a * n + fill[a * (n + 1) + t]++] = static_cast<std::uint32_t>(s);
            }
        }
    }

    // Blocks are contiguous ranges of elems; marked elements sit at the front.
    const std::uint32_t init_blocks = *std::max_element(initial_block.begin(), initial_block.end()) + 1;
    std::vector<std::uint32_t> elems(n), loc(n), blk(initial_block);
    std::vector<std::uint32_t> first, past, marked;
    {
        std::vector<std::uint32_t> count(init_blocks + 1, 0);
        for (std::size_t s = 0; s < n; ++s) { ++count[initial_block[s] + 1]; }
        std::partial_sum(count.begin(), count.end(), count.begin());
        std::vector<std::uint32_t> cursor(count.begin(), count.end() - 1);
        for (std::size_t s = 0; s < n; ++s) {
            const std::uint32_t pos = cursor[initial_block[s]]++;
            elems[pos] = static_cast<std::uint32_t>(s);
            loc[s] = pos;
        }
        // Compact away empty initial blocks.
        std::vector<std::uint32_t> renumber(init_blocks, 0);
        for (std::uint32_t b = 0; b < init_blocks; ++b) {
            if (count[b + 1] > count[b]) {
                renumber[b] = static_cast<std::uint32_t>(first.size());
                first.push_back(count[b]);
                past.push_back(count[b + 1]);
                marked.push_back(0);
            }
        }
        for (auto& b : blk) { b = renumber[b]; }
    }

    std::vector<char> in_work(first.size() * k, 0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> work;
    for (std::uint32_t b = 0; b < first.size(); ++b) {
        for (std::uint32_t a = 0; a < k; ++a) {
            work.emplace_back(b, a);
            in_work[b * k + a] = 1;
        }
    }

    std::vector<std::uint32_t> splitter;
    std::vector<std::uint32_t> touched;
    while (!work.empty()) {
        const auto [sb, a] = work.back();
        work.pop_back();
        in_work[sb * k + a] = 0;

        splitter.clear();
        const std::uint32_t* row = &inv_start[a * (n + 1)];
        for (std::uint32_t i = first[sb]; i < past[sb]; ++i) {
            const std::uint32_t t = elems[i];
            for (std::uint32_t j = row[t]; j < row[t + 1]; ++j) { splitter.push_back(inv[a * n + j]); }
        }

        touched.clear();
        for (std::uint32_t s : splitter) {
            const std::uint32_t b = blk[s];
            if (marked[b] == 0) { touched.push_back(b); }
            const std::uint32_t target = first[b] + marked[b];
            const std::uint32_t other = elems[target];
            std::swap(elems[target], elems[loc[s]]);
            loc[other] = loc[s];
            loc[s] = target;
            ++marked[b];
        }

        for (std::uint32_t b : touched) {
            if (marked[b] == past[b] - first[b]) {
                marked[b] = 0;
                continue;
            }
            const auto nb = static_cast<std::uint32_t>(first.size());
            first.push_back(first[b]);
            past.push_back(first[b] + marked[b]);
            marked.push_back(0);
            first[b] = past[nb];
            marked[b] = 0;
            for (std::uint32_t i = first[nb]; i < past[nb]; ++i) { blk[elems[i]] = nb; }
            in_work.resize(first.size() * k, 0);
            const bool new_smaller = (past[nb] - first[nb]) <= (past[b] - first[b]);
            for (std::uint32_t c = 0; c < k; ++c) {
                if (in_work[b * k + c] != 0) {
                    work.emplace_back(nb, c);
                    in_work[nb * k + c] = 1;
                } else {
                    const std::uint32_t pick = new_smaller ? nb : b;
                    work.emplace_back(pick, c);
                    in_work[pick * k + c] = 1;
                }
            }
        }
    }
    return blk;
}

} // namespace detail

// }}}

// DistPartition {{{

std::optional<std::uint32_t> DistPartition::class_of(Mask subset) const {
    auto i = power.index_of(subset);
    if (!i) { return std::nullopt; }
    return class_id[*i];
}

bool DistPartition::equivalent(Mask lhs, Mask rhs) const {
    auto a = class_of(lhs);
    auto b = class_of(rhs);
    return a && b && *a == *b;
}

DistPartition dist_partition(PowerAutomaton power) {
    const std::size_t count = power.size();
    const std::size_t k = power.base().num_letters();
    std::vector<std::uint32_t> succ(count * k);
    std::vector<std::uint32_t> initial(count);
    for (std::size_t i = 0; i < count; ++i) {
        initial[i] = power.is_final(i) ? 1 : 0;
        for (Letter a = 0; a < k; ++a) { succ[i * k + a] = static_cast<std::uint32_t>(power.successor(i, a)); }
    }
    std::vector<std::uint32_t> raw = detail::refine_partition(count, k, succ, initial);

    // Canonical ids: ordered by the smallest subset encoding in each class.
    const std::uint32_t raw_count = raw.empty() ? 0 : *std::max_element(raw.begin(), raw.end()) + 1;
    std::vector<Mask> least(raw_count, ~Mask{0});
    for (std::size_t i = 0; i < count; ++i) { least[raw[i]] = std::min(least[raw[i]], power.node(i)); }
    std::vector<std::uint32_t> order(raw_count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return least[x] < least[y]; });
    std::vector<std::uint32_t> rename(raw_count);
    for (std::uint32_t r = 0; r < raw_count; ++r) { rename[order[r]] = r; }
    for (auto& c : raw) { c = rename[c]; }

    return DistPartition{std::move(power), std::move(raw), raw_count};
}

DistPartition dist_partition(const SemiAutomaton& aut, PowerScope scope, unsigned cap) {
    return dist_partition(PowerAutomaton::build(aut, scope, cap));
}

// }}}

std::uint64_t max_syn_state_complexity(std::size_t n) { return (std::uint64_t{1} << n) - n; }

std::uint64_t syn_state_complexity(const SemiAutomaton& aut, unsigned cap) {
    PowerAutomaton power = PowerAutomaton::build(aut, PowerScope::reachable, cap);
    bool any_final = false;
    for (std::size_t i = 0; i < power.size() && !any_final; ++i) { any_final = power.is_final(i); }
    // Syn(A) is empty: the minimal complete acceptor is one rejecting sink.
    if (!any_final) { return 1; }
    // Singletons are all final and closed under the letters, so refinement
    // keeps them in one class: the merged accepting sink.
    return dist_partition(std::move(power)).num_classes;
}

std::optional<Word> shortest_reset(const SemiAutomaton& aut, unsigned cap) {
    const PowerAutomaton power = PowerAutomaton::build(aut, PowerScope::reachable, cap);
    for (std::size_t i = 0; i < power.size(); ++i) {
        if (power.is_final(i)) { return power.word_to(power.node(i)); }
    }
    return std::nullopt;
}

TwoSetResult all_2sets_distinguishable(const SemiAutomaton& aut, unsigned cap) {
    const DistPartition part = dist_partition(aut, PowerScope::up_to_pairs, cap);
    const std::size_t n = aut.num_states();
    std::vector<std::int64_t> seen(part.num_classes, -1);
    for (std::size_t i = 0; i < part.power.size(); ++i) {
        const Mask s = part.power.node(i);
        if (popcount(s) != 2) { continue; }
        const std::uint32_t c = part.class_id[i];
        if (seen[c] >= 0) {
            return {false, std::make_pair(StateSet::from_mask(n, static_cast<Mask>(seen[c])), StateSet::from_mask(n, s))};
        }
        seen[c] = s;
    }
    return {true, std::nullopt};
}

ReachResult is_completely_reachable(const PowerAutomaton& power) {
    if (power.scope() != PowerScope::reachable) {
        throw std::invalid_argument("is_completely_reachable needs a reachable-scope power automaton");
    }
    const std::size_t n = power.base().num_states();
    if (power.size() == full_mask(n)) { return {true, std::nullopt}; }
    for (std::size_t size = 1; size <= n; ++size) {
        // Masks of the given popcount in increasing order (Gosper's hack).
        std::uint64_t m = (std::uint64_t{1} << size) - 1;
        while (m < (std::uint64_t{1} << n)) {
            if (!power.contains(static_cast<Mask>(m))) {
                return {false, StateSet::from_mask(n, m)};
            }
            const std::uint64_t c = m & (~m + 1);
            const std::uint64_t r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
    }
    return {false, std::nullopt};
}

ReachResult is_completely_reachable(const SemiAutomaton& aut, unsigned cap) {
    return is_completely_reachable(PowerAutomaton::build(aut, PowerScope::reachable, cap));
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t r) {
    std::uint64_t out = 1;
    for (std::size_t i = 1; i <= r; ++i) { out = out * (n - r + i) / i; }
    return out;
}

} // namespace

bool k_level_reachable(const PowerAutomaton& power, std::size_t level) {
    const std::size_t n = power.base().num_states();
    if (level < 1 || level > n) {
        throw std::invalid_argument("level " + std::to_string(level) + " outside [1, " + std::to_string(n) + "]");
    }
    std::uint64_t hits = 0;
    for (Mask s : power.nodes()) {
        if (popcount(s) == level) { ++hits; }
    }
    return hits == binomial(n, level);
}

bool k_level_reachable(const SemiAutomaton& aut, std::size_t level, unsigned cap) {
    if (level < 1 || level > aut.num_states()) {
        throw std::invalid_argument("level " + std::to_string(level) + " outside [1, " +
                                    std::to_string(aut.num_states()) + "]");
    }
    return k_level_reachable(PowerAutomaton::build(aut, PowerScope::reachable, cap), level);
}

std::uint64_t don_depth_bound(std::size_t n, std::size_t size) { return n * (n - size); }

DepthCheck reach_depth_bound_check(const SemiAutomaton& aut, const DepthBound& bound, unsigned cap) {
    const PowerAutomaton power = PowerAutomaton::build(aut, PowerScope::reachable, cap);
    const std::size_t n = aut.num_states();
    if (power.size() != full_mask(n)) { throw std::domain_error("automaton is not completely reachable"); }
    std::optional<Mask> worst;
    for (Mask s : power.nodes()) {
        if (*power.depth(s) > bound(n, popcount(s)) && (!worst || s < *worst)) { worst = s; }
    }
    if (worst) { return {false, StateSet::from_mask(n, *worst)}; }
    return {true, std::nullopt};
}

} // namespace syncro
