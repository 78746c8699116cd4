/* oracle.cc -- Reference computations over explicit subset lists.
 */

#include "syncro/oracle.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "syncro/powerset.hh"

namespace syncro {

namespace {

using Subset = std::vector<State>;  // sorted, duplicate free

void guard(const SemiAutomaton& aut) {
    if (aut.num_states() > kOracleCap) { throw CapExceeded(aut.num_states(), kOracleCap); }
}

Subset image(const SemiAutomaton& aut, const Subset& s, Letter a) {
    std::set<State> out;
    for (State q : s) { out.insert(aut.next(q, a)); }
    return Subset(out.begin(), out.end());
}

Subset all_states(std::size_t n) {
    Subset s(n);
    std::iota(s.begin(), s.end(), 0);
    return s;
}

std::vector<Subset> reachable_subsets(const SemiAutomaton& aut) {
    std::map<Subset, bool> seen;
    std::vector<Subset> order{all_states(aut.num_states())};
    seen[order.front()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < aut.num_letters(); ++a) {
            Subset t = image(aut, order[i], a);
            if (!seen.count(t)) {
                seen[t] = true;
                order.push_back(std::move(t));
            }
        }
    }
    return order;
}

} // namespace

std::uint64_t oracle_sc(const SemiAutomaton& aut) {
    guard(aut);
    const std::vector<Subset> nodes = reachable_subsets(aut);
    const std::size_t N = nodes.size();
    const std::size_t k = aut.num_letters();
    std::map<Subset, std::size_t> id;
    for (std::size_t i = 0; i < N; ++i) { id[nodes[i]] = i; }
    std::vector<std::vector<std::size_t>> succ(N, std::vector<std::size_t>(k));
    for (std::size_t i = 0; i < N; ++i) {
        for (Letter a = 0; a < k; ++a) { succ[i][a] = id.at(image(aut, nodes[i], a)); }
    }

    // Table filling: mark pairs split by finality, then anything leading to a
    // marked pair, until nothing changes.
    std::vector<std::vector<bool>> marked(N, std::vector<bool>(N, false));
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            marked[i][j] = (nodes[i].size() == 1) != (nodes[j].size() == 1);
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (marked[i][j]) { continue; }
                for (Letter a = 0; a < k; ++a) {
                    std::size_t x = succ[i][a], y = succ[j][a];
                    if (x < y) { std::swap(x, y); }
                    if (x != y && marked[x][y]) {
                        marked[i][j] = true;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    // Unmarked pairs form an equivalence; count nodes with no earlier partner.
    std::uint64_t classes = 0;
    for (std::size_t i = 0; i < N; ++i) {
        bool fresh = true;
        for (std::size_t j = 0; j < i && fresh; ++j) { fresh = marked[i][j]; }
        classes += fresh ? 1 : 0;
    }
    return classes;
}

bool oracle_complete_reachable(const SemiAutomaton& aut) {
    guard(aut);
    const std::uint64_t total = (std::uint64_t{1} << aut.num_states()) - 1;
    return reachable_subsets(aut).size() == total;
}

bool oracle_2set_distinguishable(const SemiAutomaton& aut) {
    guard(aut);
    const std::size_t n = aut.num_states();
    std::vector<Subset> pairs;
    for (State p = 0; p < n; ++p) {
        for (State q = p + 1; q < n; ++q) { pairs.push_back({p, q}); }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            std::set<std::pair<Subset, Subset>> seen{{pairs[i], pairs[j]}};
            std::deque<std::pair<Subset, Subset>> queue{{pairs[i], pairs[j]}};
            bool separated = false;
            while (!queue.empty() && !separated) {
                auto [x, y] = queue.front();
                queue.pop_front();
                if ((x.size() == 1) != (y.size() == 1)) {
                    separated = true;
                    break;
                }
                for (Letter a = 0; a < aut.num_letters(); ++a) {
                    std::pair<Subset, Subset> nxt{image(aut, x, a), image(aut, y, a)};
                    if (seen.insert(nxt).second) { queue.push_back(std::move(nxt)); }
                }
            }
            if (!separated) { return false; }
        }
    }
    return true;
}

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

SemiAutomaton from_transformations(const std::vector<Transformation>& letters) {
    const std::size_t n = letters.front().degree();
    std::vector<std::vector<State>> delta(n);
    for (State q = 0; q < n; ++q) {
        for (const auto& f : letters) { delta[q].push_back(f(q)); }
    }
    return make_automaton(n, letters.size(), delta);
}

SemiAutomaton random_automaton(Rng& rng, std::size_t n, std::size_t k) {
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<std::vector<State>> delta(n, std::vector<State>(k));
    for (auto& row : delta) {
        for (auto& t : row) { t = pick(rng); }
    }
    return make_automaton(n, k, delta);
}

Transformation random_permutation(Rng& rng, std::size_t n) {
    std::vector<State> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Transformation(std::move(img));
}

Transformation random_cycle(Rng& rng, std::size_t n) {
    std::vector<State> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<State> img(n);
    for (std::size_t i = 0; i < n; ++i) { img[order[i]] = order[(i + 1) % n]; }
    return Transformation(std::move(img));
}

Transformation random_rank_deficient(Rng& rng, std::size_t n) {
    // A bijection from Q minus x onto Q minus s, then x joins a random y.
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    const State x = pick(rng);
    const State s = pick(rng);
    std::vector<State> targets;
    for (State q = 0; q < n; ++q) {
        if (q != s) { targets.push_back(q); }
    }
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<State> img(n);
    std::size_t t = 0;
    for (State q = 0; q < n; ++q) {
        if (q != x) { img[q] = targets[t++]; }
    }
    State y = pick(rng);
    while (y == x) { y = pick(rng); }
    img[x] = img[y];
    return Transformation(std::move(img));
}

SemiAutomaton random_circular_binary(Rng& rng, std::size_t n) {
    return from_transformations({random_rank_deficient(rng, n), random_cycle(rng, n)});
}

SemiAutomaton random_mixed(Rng& rng, std::size_t n, std::size_t defects, std::size_t perms) {
    std::vector<Transformation> letters;
    for (std::size_t i = 0; i < defects; ++i) { letters.push_back(random_rank_deficient(rng, n)); }
    std::bernoulli_distribution keep(0.5);
    for (std::size_t i = 0; i < perms; ++i) {
        std::vector<State> moved;
        for (State q = 0; q < n; ++q) {
            if (keep(rng)) { moved.push_back(q); }
        }
        std::vector<State> img(n);
        std::iota(img.begin(), img.end(), 0);
        std::vector<State> shuffled = moved;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t j = 0; j < moved.size(); ++j) { img[moved[j]] = shuffled[j]; }
        letters.emplace_back(std::move(img));
    }
    return from_transformations(letters);
}

} // namespace syncro
