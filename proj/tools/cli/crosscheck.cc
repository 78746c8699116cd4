/* crosscheck.cc -- Suites run on a seeded corpus, one sample at a time.
 */

#include "cli/crosscheck.hh"

#include <functional>
#include <stdexcept>

#include "cli/io.hh"
#include "syncro/criteria.hh"
#include "syncro/oracle.hh"
#include "syncro/structure.hh"

namespace syncro::cli {

namespace {

struct Suites {
    std::vector<SuiteResult> results;

    SuiteResult& get(const std::string& name) {
        for (auto& r : results) {
            if (r.name == name) { return r; }
        }
        results.push_back(SuiteResult{name, 0, 0, std::nullopt});
        return results.back();
    }

    void record(const std::string& name, bool ok, const SemiAutomaton& aut, std::size_t index) {
        SuiteResult& r = get(name);
        ++r.checked;
        if (ok) {
            ++r.passed;
        } else if (!r.counterexample) {
            r.counterexample = serialize_document(to_document(aut, "sample " + std::to_string(index), name));
        }
    }
};

} // namespace

std::vector<SuiteResult> crosscheck(const CrosscheckOptions& opt) {
    if (opt.nmax < 2 || opt.nmax > kOracleCap) {
        throw std::invalid_argument("--nmax must lie in 2.." + std::to_string(kOracleCap) +
                                    " (oracle cap), got " + std::to_string(opt.nmax));
    }
    Suites s;
    if (opt.samples == 0) { return s.results; }
    for (const char* name : {"oracle-sc", "oracle-reach", "oracle-2sets", "lemma1", "lemma2", "binary-level",
                             "prop1", "soundness"}) {
        s.get(name);
    }

    const std::size_t sizes = opt.nmax - 1;
    for (std::size_t i = 0; i < opt.samples; ++i) {
        Rng rng = sample_rng(opt.seed, i);
        const std::size_t n = 2 + i % sizes;
        const std::size_t k = 1 + (i / sizes) % 3;

        const SemiAutomaton u = random_automaton(rng, n, k);
        const std::uint64_t sc = syn_state_complexity(u);
        const bool reach = is_completely_reachable(u).ok;
        const bool two = all_2sets_distinguishable(u).ok;
        const bool maximal = sc == max_syn_state_complexity(n);
        s.record("oracle-sc", sc == oracle_sc(u), u, i);
        s.record("oracle-reach", reach == oracle_complete_reachable(u), u, i);
        s.record("oracle-2sets", two == oracle_2set_distinguishable(u), u, i);
        // 2-sets settle maximality only when some letter is cyclic; see verdict().
        s.record("lemma1", (!maximal || two) && (!reach || !is_circular(u) || maximal == two), u, i);
        s.record("lemma2", !maximal || !is_strongly_connected(u) || reach, u, i);

        if (n < 3) { continue; }

        const SemiAutomaton bin = i % 2 == 0 ? random_automaton(rng, n, 2) : random_circular_binary(rng, n);
        s.record("binary-level", k_level_reachable(bin, n - 1) == binary_structure(bin).ok, bin, i);

        const std::size_t m = 1 + rng() % (n - 1);
        const std::size_t perms = 1 + rng() % 2;
        const SemiAutomaton mixed = random_mixed(rng, n, m, perms);
        const Prop1Result p1 = prop1_equivalence(mixed);
        s.record("prop1", !p1.applicable || p1.structural == p1.reachable_n_minus_1, mixed, i);

        const SemiAutomaton circ = random_circular_binary(rng, n);
        const bool fires = theorem1_check(circ, Word{0}, Word{1}).satisfied ||
                           half_cycle_check(circ, Word{0}, Word{1}).satisfied;
        if (fires && is_completely_reachable(circ).ok) {
            s.record("soundness", oracle_sc(circ) == max_syn_state_complexity(n), circ, i);
        }
    }
    return s.results;
}

} // namespace syncro::cli
