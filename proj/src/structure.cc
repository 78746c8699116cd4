/* structure.cc -- Rank profiles, orbits, binary structure, cyclic words.
 */

#include "syncro/structure.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace syncro {

RankProfile rank_profile(const SemiAutomaton& aut) {
    const std::size_t n = aut.num_states();
    RankProfile prof;
    for (Letter a = 0; a < aut.num_letters(); ++a) {
        const Transformation f = aut.letter_action(a);
        const std::size_t r = f.rank();
        prof.rank.push_back(r);
        if (r == n) {
            prof.permutational.push_back(a);
        } else if (r + 1 == n) {
            const auto pair = f.kernel_pairs().front();
            prof.defects.push_back(DefectLetter{a, f.missing().front(), pair, f(pair.first)});
        }
    }
    return prof;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) { parent_[std::max(x, y)] = std::min(x, y); }
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

StructReport orbit_analysis(const SemiAutomaton& aut) {
    const std::size_t n = aut.num_states();
    const RankProfile prof = rank_profile(aut);
    StructReport rep;

    // The orbits of a finite permutation group are the connected components
    // of its generators' functional graphs.
    UnionFind uf(n);
    for (Letter a : prof.permutational) {
        for (State q = 0; q < n; ++q) {
            const State p = aut.next(q, a);
            uf.unite(q, p);
            if (p != q) { rep.group_nontrivial = true; }
        }
    }
    std::map<std::size_t, std::vector<State>> by_root;
    for (State q = 0; q < n; ++q) { by_root[uf.find(q)].push_back(q); }
    for (auto& [root, members] : by_root) { rep.orbits.push_back(std::move(members)); }
    std::sort(rep.orbits.begin(), rep.orbits.end());
    rep.group_transitive = rep.orbits.size() == 1;

    std::vector<bool> orbit_hit(n, false);
    for (const auto& def : prof.defects) { orbit_hit[uf.find(def.excluded)] = true; }
    rep.covered_by_excluded = true;
    for (State q = 0; q < n; ++q) {
        if (!orbit_hit[uf.find(q)]) {
            rep.covered_by_excluded = false;
            break;
        }
    }
    rep.condition = !prof.defects.empty() && rep.group_nontrivial && rep.covered_by_excluded;
    rep.applicable = prof.num_defects() < n;
    return rep;
}

Prop1Result prop1_equivalence(const SemiAutomaton& aut, unsigned cap) {
    const std::size_t n = aut.num_states();
    if (n == 1) {
        // The only (n-1)-subset is empty; both conditions hold vacuously.
        return {true, true, true};
    }
    const StructReport rep = orbit_analysis(aut);
    return {rep.applicable, rep.condition, k_level_reachable(aut, n - 1, cap)};
}

BinaryStructure binary_structure(const SemiAutomaton& aut) {
    if (aut.num_letters() != 2) {
        throw AutomatonError("binary_structure needs exactly two letters, got " + std::to_string(aut.num_letters()));
    }
    const std::size_t n = aut.num_states();
    BinaryStructure out;
    out.applicable = n > 2;
    if (!out.applicable) { return out; }
    for (Letter a = 0; a < 2; ++a) {
        const Transformation f = aut.letter_action(a);
        if (!out.cyclic_letter && f.is_cyclic()) {
            out.cyclic_letter = a;
        } else if (!out.defect_letter && f.rank() + 1 == n) {
            out.defect_letter = a;
        }
    }
    out.ok = out.cyclic_letter.has_value() && out.defect_letter.has_value();
    return out;
}

std::optional<Letter> find_cyclic_letter(const SemiAutomaton& aut) {
    for (Letter a = 0; a < aut.num_letters(); ++a) {
        if (aut.letter_action(a).is_cyclic()) { return a; }
    }
    return std::nullopt;
}

namespace {

// Stop exploring the permutation group beyond this many elements.
constexpr std::size_t kGroupElementBudget = std::size_t{1} << 21;

} // namespace

std::optional<Word> find_cyclic_word(const SemiAutomaton& aut, std::size_t max_len) {
    const std::size_t n = aut.num_states();
    if (max_len == 0) { max_len = n * n; }
    const Transformation id = Transformation::identity(n);
    if (id.is_cyclic()) { return Word{}; }

    std::vector<std::pair<Letter, Transformation>> gens;
    for (Letter a = 0; a < aut.num_letters(); ++a) {
        Transformation f = aut.letter_action(a);
        if (f.is_permutation()) { gens.emplace_back(a, std::move(f)); }
    }
    if (gens.empty()) { return std::nullopt; }

    // Breadth-first by length, extending words on the left: level order is
    // then colexicographic and the first hit is the colex-least shortest word.
    std::set<Transformation> seen{id};
    std::vector<std::pair<Transformation, Word>> frontier{{id, Word{}}};
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::pair<Transformation, Word>> next;
        for (const auto& [t, w] : frontier) {
            for (const auto& [x, g] : gens) {
                Transformation u = compose(g, t);
                if (!seen.insert(u).second) { continue; }
                Word xw = Word{x} + w;
                if (u.is_cyclic()) { return xw; }
                if (seen.size() > kGroupElementBudget) { return std::nullopt; }
                next.emplace_back(std::move(u), std::move(xw));
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

std::optional<DonWitness> don_precondition(const SemiAutomaton& aut) {
    const std::size_t n = aut.num_states();
    const RankProfile prof = rank_profile(aut);
    for (const auto& def : prof.defects) {
        for (Letter b = 0; b < aut.num_letters(); ++b) {
            const Transformation fb = aut.letter_action(b);
            if (!fb.is_cyclic()) { continue; }
            std::size_t d = 0;
            for (State q = def.excluded; q != def.merged; q = fb(q)) { ++d; }
            if (std::gcd(d, n) == 1) { return DonWitness{def.letter, b, def.excluded, def.merged, d}; }
        }
    }
    return std::nullopt;
}

} // namespace syncro
