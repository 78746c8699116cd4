#include <doctest.h>

#include <map>
#include <set>

#include "support.hh"
#include "syncro/families.hh"
#include "syncro/oracle.hh"
#include "syncro/powerset.hh"

using namespace syncro;

namespace {

// Moore refinement: split by (block, successor blocks) until stable.
std::vector<std::uint32_t> moore(std::size_t N, std::size_t k, const std::vector<std::uint32_t>& succ,
                                 std::vector<std::uint32_t> block) {
    std::size_t count = std::set<std::uint32_t>(block.begin(), block.end()).size();
    for (;;) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> sig;
        std::vector<std::uint32_t> next(N);
        for (std::size_t i = 0; i < N; ++i) {
            std::vector<std::uint32_t> key{block[i]};
            for (std::size_t a = 0; a < k; ++a) { key.push_back(block[succ[i * k + a]]); }
            next[i] = sig.emplace(key, static_cast<std::uint32_t>(sig.size())).first->second;
        }
        if (sig.size() == count) { return next; }
        count = sig.size();
        block = std::move(next);
    }
}

bool same_partition(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if ((x[i] == x[j]) != (y[i] == y[j])) { return false; }
        }
    }
    return true;
}

SemiAutomaton permutation_automaton() { return make_automaton(3, 2, {{1, 1}, {2, 0}, {0, 2}}); }

} // namespace

TEST_CASE("cerny family has maximal sc") {
    for (std::size_t n = 3; n <= 8; ++n) {
        CHECK(syn_state_complexity(build_family({Family::cerny, n})) == (1u << n) - n);
    }
}

TEST_CASE("shortest reset words") {
    const SemiAutomaton c4 = build_family({Family::cerny, 4});
    CHECK(format_word(c4, *shortest_reset(c4)) == "abbbabbba");
    CHECK(shortest_reset(build_family({Family::cerny, 6}))->size() == 25);
    const SemiAutomaton f = build_family({Family::fig3});
    CHECK(format_word(f, *shortest_reset(f)) == "ababa");
    CHECK_FALSE(shortest_reset(permutation_automaton()).has_value());
    CHECK(shortest_reset(make_automaton(1, 1, {{0}}))->empty());
}

TEST_CASE("power automaton scopes") {
    const SemiAutomaton f = build_family({Family::fig3});
    const auto reach = PowerAutomaton::build(f, PowerScope::reachable);
    CHECK(reach.size() == 15);
    CHECK(reach.node(0) == 0b1111);
    CHECK(*reach.depth(0b1111) == 0);
    for (Mask m : reach.nodes()) {
        const Word w = *reach.word_to(m);
        CHECK(w.size() == *reach.depth(m));
        CHECK(apply_word(f, StateSet::full(4), w).to_mask() == m);
    }
    CHECK(PowerAutomaton::build(f, PowerScope::full).size() == 15);
    CHECK(PowerAutomaton::build(f, PowerScope::up_to_pairs).size() == 10);

    const SemiAutomaton p = permutation_automaton();
    const auto pr = PowerAutomaton::build(p, PowerScope::reachable);
    CHECK(pr.size() == 1);
    CHECK_FALSE(pr.depth(0b001).has_value());
    CHECK_FALSE(PowerAutomaton::build(p, PowerScope::full).depth(0b111).has_value());
}

TEST_CASE("imager agrees with apply_word") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng = sample_rng(5, i);
        const std::size_t n = 1 + i % 12;
        const SemiAutomaton aut = random_automaton(rng, n, 2);
        const SubsetImager img(aut);
        for (Mask m = 1; m < (Mask{1} << n); m += 7) {
            for (Letter a = 0; a < 2; ++a) {
                CHECK(img.image(m, a) == apply_word(aut, StateSet::from_mask(n, m), Word{a}).to_mask());
            }
        }
    }
}

TEST_CASE("caps") {
    CHECK_THROWS_AS(syn_state_complexity(build_family({Family::cerny, 21})), CapExceeded);
    CHECK_THROWS_AS(check_cap(3, kMaxCap + 1), std::invalid_argument);
    CHECK_NOTHROW(check_cap(22, 22));
    CHECK(estimate_power_memory(20, 2) > estimate_power_memory(10, 2));
}

TEST_CASE("partition refinement matches Moore") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        Rng rng = sample_rng(3, i);
        const std::size_t N = 1 + i % 40, k = 1 + i % 3;
        std::vector<std::uint32_t> succ(N * k), block(N);
        for (auto& s : succ) { s = static_cast<std::uint32_t>(rng() % N); }
        for (auto& b : block) { b = static_cast<std::uint32_t>(rng() % 3); }
        CHECK(same_partition(detail::refine_partition(N, k, succ, block), moore(N, k, succ, block)));
    }
}

TEST_CASE("dist partition") {
    const SemiAutomaton f = build_family({Family::fig3});
    const DistPartition dp = dist_partition(f, PowerScope::reachable);
    CHECK(dp.num_classes == 12);
    CHECK(dp.equivalent(0b0001, 0b1000));
    CHECK_FALSE(dp.equivalent(0b0101, 0b1010));
    CHECK(*dp.class_of(0b0001) == 0);
    CHECK(syn_state_complexity(permutation_automaton()) == 1);
    CHECK(max_syn_state_complexity(9) == 503);
}

TEST_CASE("2-set distinguishability") {
    CHECK(all_2sets_distinguishable(build_family({Family::K, 7})).ok);
    const TwoSetResult p = all_2sets_distinguishable(permutation_automaton());
    CHECK_FALSE(p.ok);
    REQUIRE(p.witness.has_value());
    CHECK(p.witness->first.count() == 2);
}

TEST_CASE("complete reachability") {
    CHECK(is_completely_reachable(build_family({Family::fig3})).ok);
    const ReachResult r = is_completely_reachable(permutation_automaton());
    CHECK_FALSE(r.ok);
    CHECK(r.missing->to_string() == "{0}");
    CHECK(k_level_reachable(build_family({Family::cerny, 5}), 4));
    CHECK_FALSE(k_level_reachable(permutation_automaton(), 2));
    CHECK_THROWS_AS(k_level_reachable(permutation_automaton(), 0), std::invalid_argument);
    CHECK_THROWS_AS(k_level_reachable(permutation_automaton(), 4), std::invalid_argument);
}

TEST_CASE("depth bound") {
    CHECK(don_depth_bound(7, 3) == 28);
    CHECK(reach_depth_bound_check(build_family({Family::K, 7}), don_depth_bound).ok);
    const DepthCheck tight = reach_depth_bound_check(build_family({Family::cerny, 4}),
                                                     [](std::size_t, std::size_t) { return std::uint64_t{0}; });
    CHECK_FALSE(tight.ok);
    CHECK(tight.violator->count() < 4);
    CHECK_THROWS_AS(reach_depth_bound_check(permutation_automaton(), don_depth_bound), std::domain_error);
}
