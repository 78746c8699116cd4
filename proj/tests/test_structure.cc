#include <doctest.h>

#include "support.hh"
#include "syncro/families.hh"
#include "syncro/oracle.hh"
#include "syncro/structure.hh"

using namespace syncro;

TEST_CASE("rank profile") {
    const RankProfile p = rank_profile(build_family({Family::fig3}));
    CHECK(p.rank == std::vector<std::size_t>{3, 4});
    CHECK(p.permutational == std::vector<Letter>{1});
    REQUIRE(p.num_defects() == 1);
    CHECK(p.defects[0].excluded == 0);
    CHECK(p.defects[0].collapsed == std::pair<State, State>{0, 2});
    CHECK(p.defects[0].merged == 1);
}

TEST_CASE("K_n collapses {0,2} onto 3 and misses n-1") {
    for (std::size_t n : {6, 7, 9, 11, 12}) {
        const RankProfile p = rank_profile(build_family({Family::K, n}));
        REQUIRE(p.num_defects() == 1);
        CHECK(p.defects[0].collapsed == std::pair<State, State>{0, 2});
        CHECK(p.defects[0].merged == 3);
        CHECK(p.defects[0].excluded == n - 1);
    }
}

TEST_CASE("orbits") {
    const StructReport c = orbit_analysis(build_family({Family::cerny, 5}));
    CHECK(c.orbits.size() == 1);
    CHECK(c.group_transitive);
    CHECK(c.condition);
    CHECK(c.applicable);

    // Letter 1 swaps 0 and 1, fixes 2; letter 0 has rank 2 and misses 2.
    const SemiAutomaton split = make_automaton(3, 2, {{0, 1}, {1, 0}, {0, 2}});
    const StructReport s = orbit_analysis(split);
    CHECK(s.orbits == std::vector<std::vector<State>>{{0, 1}, {2}});
    CHECK(s.group_nontrivial);
    CHECK_FALSE(s.group_transitive);
    CHECK_FALSE(s.covered_by_excluded);
    CHECK_FALSE(s.condition);
}

TEST_CASE("prop1 equivalence") {
    const Prop1Result one = prop1_equivalence(make_automaton(1, 1, {{0}}));
    CHECK((one.applicable && one.structural && one.reachable_n_minus_1));
    const Prop1Result c = prop1_equivalence(build_family({Family::cerny, 6}));
    CHECK(c.applicable);
    CHECK(c.structural == c.reachable_n_minus_1);
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng = sample_rng(21, i);
        const std::size_t n = 3 + i % 5;
        const SemiAutomaton aut = random_mixed(rng, n, 1 + i % (n - 1), 1 + i % 2);
        const Prop1Result r = prop1_equivalence(aut);
        CHECK(r.applicable);
        CHECK(r.structural == r.reachable_n_minus_1);
    }
}

TEST_CASE("binary structure") {
    const BinaryStructure k = binary_structure(build_family({Family::K, 7}));
    CHECK(k.ok);
    CHECK(*k.cyclic_letter == 1);
    CHECK(*k.defect_letter == 0);
    CHECK_FALSE(binary_structure(make_automaton(2, 2, {{1, 0}, {0, 0}})).applicable);
    CHECK_THROWS_AS(binary_structure(make_automaton(2, 3, {{1, 0, 0}, {0, 0, 1}})), AutomatonError);
    CHECK_FALSE(binary_structure(build_family({Family::gc_footnote})).ok);
}

TEST_CASE("cyclic words") {
    const SemiAutomaton g = build_family({Family::gc_footnote});
    CHECK_FALSE(is_circular(g));
    CHECK(format_word(g, *find_cyclic_word(g)) == "ba");
    CHECK(*find_cyclic_letter(build_family({Family::fig3})) == 1);
    CHECK(find_cyclic_word(build_family({Family::fig3}))->size() == 1);
    CHECK(find_cyclic_word(make_automaton(1, 1, {{0}}))->empty());
    // Two commuting transpositions never give a 4-cycle.
    CHECK_FALSE(find_cyclic_word(make_automaton(4, 2, {{1, 0}, {0, 1}, {2, 3}, {3, 2}})).has_value());
    CHECK_FALSE(find_cyclic_word(make_automaton(3, 1, {{0}, {0}, {0}})).has_value());
}

TEST_CASE("reachability certificate") {
    const auto k7 = don_precondition(build_family({Family::K, 7}));
    REQUIRE(k7.has_value());
    CHECK(k7->s == 6);
    CHECK(k7->t == 3);
    CHECK(k7->d == 4);
    CHECK(don_precondition(build_family({Family::K, 9}))->d == 4);
    CHECK(don_precondition(build_family({Family::cerny, 5}))->d == 1);
    CHECK_FALSE(don_precondition(build_family({Family::gc_footnote})).has_value());
    // a collapses {0,2} onto 0 and misses 2: distance 2 from 2 to 0 in C_4.
    CHECK_FALSE(don_precondition(make_automaton(4, 2, {{0, 1}, {1, 2}, {0, 3}, {3, 0}})).has_value());
}

TEST_CASE("certificate implies complete reachability") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        Rng rng = sample_rng(8, i);
        const SemiAutomaton aut = random_circular_binary(rng, 3 + i % 6);
        if (don_precondition(aut)) {
            CHECK(is_completely_reachable(aut).ok);
            CHECK(reach_depth_bound_check(aut, don_depth_bound).ok);
        }
    }
}
