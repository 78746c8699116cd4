#include <doctest.h>

#include "syncro/families.hh"
#include "syncro/oracle.hh"
#include "syncro/powerset.hh"

using namespace syncro;

TEST_CASE("oracle values") {
    CHECK(oracle_sc(build_family({Family::fig3})) == 12);
    CHECK(oracle_sc(make_automaton(1, 1, {{0}})) == 1);
    CHECK(oracle_sc(build_family({Family::cerny, 5})) == 27);
    CHECK(oracle_complete_reachable(build_family({Family::K, 7})));
    CHECK(oracle_complete_reachable(build_family({Family::fig3})));
    CHECK(oracle_2set_distinguishable(build_family({Family::K, 7})));
    CHECK(oracle_2set_distinguishable(build_family({Family::cerny, 6})));

    const SemiAutomaton perm = make_automaton(3, 2, {{1, 1}, {2, 0}, {0, 2}});
    CHECK_FALSE(oracle_complete_reachable(perm));
    CHECK_FALSE(oracle_2set_distinguishable(perm));
    CHECK(oracle_sc(perm) == 1);
}

TEST_CASE("oracle cap") {
    CHECK_THROWS_AS(oracle_sc(build_family({Family::cerny, 13})), CapExceeded);
    CHECK_THROWS_AS(oracle_complete_reachable(build_family({Family::cerny, 13})), CapExceeded);
}

TEST_CASE("oracle agrees with the power automaton") {
    for (std::uint64_t i = 0; i < 1000; ++i) {
        Rng rng = sample_rng(1, i);
        const SemiAutomaton aut = random_automaton(rng, 2 + i % 5, 1 + (i / 5) % 3);
        CHECK(oracle_sc(aut) == syn_state_complexity(aut));
        CHECK(oracle_complete_reachable(aut) == is_completely_reachable(aut).ok);
        CHECK(oracle_2set_distinguishable(aut) == all_2sets_distinguishable(aut).ok);
    }
}

TEST_CASE("generators") {
    Rng rng = sample_rng(4, 0);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + i % 9;
        CHECK(random_cycle(rng, n).is_cyclic());
        CHECK(random_permutation(rng, n).is_permutation());
        CHECK(random_rank_deficient(rng, n).rank() == n - 1);
    }
    Rng x = sample_rng(9, 3), y = sample_rng(9, 3), z = sample_rng(9, 4);
    CHECK(random_automaton(x, 5, 2) == random_automaton(y, 5, 2));
    CHECK(x() != z());
}
