/* criteria.cc -- Criterion searches, rank-word enumeration and the verdict.
 */

#include "syncro/criteria.hh"

#include <numeric>
#include <set>
#include <sstream>

#include "syncro/structure.hh"

namespace syncro {

const char* to_string(EqCase c) {
    switch (c) {
    case EqCase::shift: return "shift";
    case EqCase::image_shift: return "image-shift";
    case EqCase::back_shift: return "back-shift";
    case EqCase::half_cycle: return "half-cycle";
    }
    return "?";
}

const char* to_string(MaxSc v) {
    switch (v) {
    case MaxSc::proved: return "proved";
    case MaxSc::refuted: return "refuted";
    case MaxSc::unknown: return "unknown";
    }
    return "?";
}

std::vector<JustificationStep> Verdict::fired() const {
    std::vector<JustificationStep> out;
    for (const auto& s : justification) {
        if (s.holds) { out.push_back(s); }
    }
    return out;
}

namespace {

// pow[j][q] = q b^j for 0 <= j < n; b is a permutation.
std::vector<std::vector<State>> cyclic_powers(const Transformation& fb) {
    const std::size_t n = fb.degree();
    std::vector<std::vector<State>> pow(n, std::vector<State>(n));
    for (State q = 0; q < n; ++q) { pow[0][q] = q; }
    for (std::size_t j = 1; j < n; ++j) {
        for (State q = 0; q < n; ++q) { pow[j][q] = fb(pow[j - 1][q]); }
    }
    return pow;
}

struct Actions {
    Transformation fa;
    Transformation fb;
};

CriterionResult vacuous() {
    CriterionResult res;
    res.satisfied = true;
    res.witness = CriterionWitness{};
    return res;
}

CriterionResult violated(std::string detail) {
    CriterionResult res;
    res.reason = reason::kHypotheses;
    res.detail = std::move(detail);
    return res;
}

// Checks that b is an n-cycle and a has rank n-1.
std::optional<CriterionResult> check_hypotheses(const SemiAutomaton& aut, const Word& a, const Word& b,
                                                Actions& out) {
    aut.check_word(a);
    aut.check_word(b);
    const std::size_t n = aut.num_states();
    out.fa = transformation_of(aut, a);
    out.fb = transformation_of(aut, b);
    if (!out.fb.is_cyclic()) { return violated("b does not act as an n-cycle"); }
    if (out.fa.rank() + 1 != n) {
        return violated("a has rank " + std::to_string(out.fa.rank()) + ", need " + std::to_string(n - 1));
    }
    return std::nullopt;
}

std::size_t offset_of(const std::vector<std::vector<State>>& pow, State from, State to) {
    for (std::size_t s = 0; s < pow.size(); ++s) {
        if (pow[s][from] == to) { return s; }
    }
    return 0;
}

// Explains a failed search. Any witness has the collapsed pair at b-distance
// d (the shift equation at m = d), so a non-coprime distance rules it out.
void explain_failure(CriterionResult& res, const Actions& act, const std::vector<std::vector<State>>& pow) {
    const std::size_t n = act.fa.degree();
    const auto [x, y] = act.fa.kernel_pairs().front();
    const std::size_t dist = offset_of(pow, x, y);
    if (std::gcd(dist, n) != 1) {
        res.reason = reason::kDistanceNotCoprime;
        res.detail = "gcd(" + std::to_string(dist) + "," + std::to_string(n) + ") != 1";
    } else {
        res.reason = reason::kNoWitness;
        res.detail = "collapsed pair {" + std::to_string(x) + "," + std::to_string(y) + "} at distance " +
                     std::to_string(dist);
    }
}

std::optional<CriterionWitness> search(const Actions& act, const std::vector<std::vector<State>>& pow,
                                       const std::vector<std::size_t>& distances) {
    const std::size_t n = act.fa.degree();
    for (State q = 0; q < n; ++q) {
        const State aq = act.fa(q);
        for (std::size_t d : distances) {
            CriterionWitness w;
            w.q = q;
            w.d = d;
            w.s_offset = offset_of(pow, q, aq);
            bool ok = true;
            for (std::size_t m = 1; m < n && ok; ++m) {
                const State lhs = act.fa(pow[m][q]);
                if (lhs == pow[(n + m - d) % n][aq]) {
                    w.per_m.push_back({m, EqCase::shift, std::nullopt});
                    continue;
                }
                ok = false;
                if (m % d == 0) { break; }
                for (std::size_t r = 0; r < n; r += d) {
                    if (pow[r][aq] == lhs) {
                        w.per_m.push_back({m, EqCase::image_shift, r});
                    } else if (pow[r][lhs] == aq) {
                        w.per_m.push_back({m, EqCase::back_shift, r});
                    } else {
                        continue;
                    }
                    ok = true;
                    break;
                }
            }
            if (ok) { return w; }
        }
    }
    return std::nullopt;
}

} // namespace

CriterionResult theorem1_check(const SemiAutomaton& aut, const Word& a, const Word& b) {
    const std::size_t n = aut.num_states();
    if (n == 1) { return vacuous(); }
    Actions act;
    if (auto bad = check_hypotheses(aut, a, b, act)) { return *bad; }
    const auto pow = cyclic_powers(act.fb);
    std::vector<std::size_t> distances;
    for (std::size_t d = 1; d < n; ++d) {
        if (std::gcd(d, n) == 1) { distances.push_back(d); }
    }
    CriterionResult res;
    res.witness = search(act, pow, distances);
    res.satisfied = res.witness.has_value();
    if (!res.satisfied) { explain_failure(res, act, pow); }
    return res;
}

CriterionResult corollary_word_check(const SemiAutomaton& aut, const Word& w, const Word& b) {
    const std::size_t n = aut.num_states();
    if (n == 1) { return vacuous(); }
    Actions act;
    if (auto bad = check_hypotheses(aut, w, b, act)) { return *bad; }
    const auto pow = cyclic_powers(act.fb);
    CriterionResult res;
    res.witness = search(act, pow, {1});
    res.satisfied = res.witness.has_value();
    if (res.satisfied) {
        // m = n-1 would read delta(q, w) = delta(q, w b^(n-1)).
        const State wq = act.fa(res.witness->q);
        res.witness->boundary_holds = pow[n - 1][wq] == wq;
    } else {
        explain_failure(res, act, pow);
    }
    return res;
}

CriterionResult half_cycle_check(const SemiAutomaton& aut, const Word& a, const Word& b) {
    const std::size_t n = aut.num_states();
    if (n == 1) { return vacuous(); }
    Actions act;
    if (auto bad = check_hypotheses(aut, a, b, act)) { return *bad; }
    const auto pow = cyclic_powers(act.fb);
    CriterionResult res;
    for (State q = 0; q < n && !res.satisfied; ++q) {
        const State aq = act.fa(q);
        CriterionWitness w;
        w.q = q;
        w.s_offset = offset_of(pow, q, aq);
        bool ok = true;
        for (std::size_t m = 0; m + 1 <= n / 2; ++m) {
            if (act.fa(pow[(m + 1) % n][q]) != pow[m][aq]) {
                ok = false;
                break;
            }
            w.per_m.push_back({m, EqCase::half_cycle, std::nullopt});
        }
        if (ok) {
            res.satisfied = true;
            res.witness = std::move(w);
        }
    }
    if (!res.satisfied) {
        res.reason = reason::kNoWitness;
        res.detail = "every q fails some 0 <= m < " + std::to_string(n / 2);
    }
    return res;
}

std::vector<RankWord> enumerate_rank_words(const SemiAutomaton& aut, std::size_t target_rank, std::size_t max_len,
                                           std::size_t max_elements) {
    const std::size_t n = aut.num_states();
    const std::size_t k = aut.num_letters();
    if (max_len == 0) { max_len = 2 * n + 2; }
    std::vector<RankWord> out;
    if (target_rank == 0 || target_rank > n) { return out; }

    std::vector<Transformation> act;
    for (Letter x = 0; x < k; ++x) { act.push_back(aut.letter_action(x)); }

    // Level order with right extension: each level is lexicographically
    // sorted, so first sightings are shortlex-least. Ranks never grow along a
    // word, so anything below the target is dropped.
    const Transformation id = Transformation::identity(n);
    std::set<Transformation> seen{id};
    std::vector<RankWord> frontier{{Word{}, id}};
    if (n == target_rank) { out.push_back(frontier.front()); }
    for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<RankWord> next;
        for (const auto& [w, t] : frontier) {
            for (Letter x = 0; x < k; ++x) {
                Transformation u = compose(t, act[x]);
                const std::size_t r = u.rank();
                if (r < target_rank || !seen.insert(u).second) { continue; }
                if (seen.size() > max_elements) {
                    throw MonoidTooLarge("more than " + std::to_string(max_elements) +
                                         " transformations of rank >= " + std::to_string(target_rank));
                }
                Word wx = w;
                wx.push_back(x);
                if (r == target_rank) { out.push_back({wx, u}); }
                next.push_back({std::move(wx), std::move(u)});
            }
        }
        frontier = std::move(next);
    }
    return out;
}

namespace {

constexpr std::size_t kVerdictMonoidBudget = std::size_t{1} << 18;

std::string witness_text(const SemiAutomaton& aut, const Word& a, const Word& b, const CriterionResult& res) {
    std::ostringstream os;
    os << "a=" << format_word_compact(aut, a) << " b=" << format_word_compact(aut, b);
    if (res.witness) {
        os << " q=" << res.witness->q;
        if (!res.witness->per_m.empty() && res.witness->per_m.front().eq != EqCase::half_cycle) {
            os << " d=" << res.witness->d;
        }
        for (const auto& st : res.witness->per_m) {
            if (st.r) { os << " m=" << st.m << ":" << to_string(st.eq) << "(r=" << *st.r << ")"; }
        }
    } else {
        os << " " << res.reason;
        if (!res.detail.empty()) { os << " (" << res.detail << ")"; }
    }
    return os.str();
}

// Letter pairs first, then rank n-1 words against cyclic words.
bool run_criteria(const SemiAutomaton& aut, const VerdictBudget& budget, std::vector<JustificationStep>& steps) {
    const std::size_t n = aut.num_states();
    const RankProfile prof = rank_profile(aut);
    std::vector<Word> cyclic;
    for (Letter x = 0; x < aut.num_letters(); ++x) {
        if (aut.letter_action(x).is_cyclic()) { cyclic.push_back(Word{x}); }
    }

    auto attempt = [&](const Word& a, const Word& b, bool record_failure) {
        const CriterionResult t1 = theorem1_check(aut, a, b);
        if (t1.satisfied || record_failure) { steps.push_back({"theorem1", t1.satisfied, witness_text(aut, a, b, t1)}); }
        if (t1.satisfied) { return true; }
        const CriterionResult hc = half_cycle_check(aut, a, b);
        if (hc.satisfied || record_failure) {
            steps.push_back({"half-cycle", hc.satisfied, witness_text(aut, a, b, hc)});
        }
        return hc.satisfied;
    };

    for (const auto& def : prof.defects) {
        for (const Word& b : cyclic) {
            if (attempt(Word{def.letter}, b, true)) { return true; }
        }
    }

    if (cyclic.empty()) {
        if (auto w = find_cyclic_word(aut)) { cyclic.push_back(*w); }
    }
    if (cyclic.empty()) {
        steps.push_back({"cyclic-word", false, "no word acts as an n-cycle within length n^2"});
        return false;
    }
    std::vector<RankWord> words;
    try {
        words = enumerate_rank_words(aut, n - 1, budget.word_len, kVerdictMonoidBudget);
    } catch (const MonoidTooLarge& e) {
        steps.push_back({"rank-words", false, e.what()});
        return false;
    }
    std::size_t tried = 0;
    std::optional<std::string> last_reason;
    for (const auto& rw : words) {
        for (const Word& b : cyclic) {
            if (rw.word.size() == 1 && b.size() == 1) { continue; }
            ++tried;
            if (attempt(rw.word, b, false)) { return true; }
            last_reason = theorem1_check(aut, rw.word, b).reason;
        }
    }
    std::string detail = std::to_string(tried) + " word pair(s) up to length " +
                         std::to_string(budget.word_len ? budget.word_len : 2 * n + 2) + " without witness";
    if (last_reason) { detail += ", last: " + *last_reason; }
    steps.push_back({"word-criteria", false, detail});
    return false;
}

} // namespace

Verdict verdict(const SemiAutomaton& aut, const VerdictBudget& budget) {
    const std::size_t n = aut.num_states();
    const bool exact_ok = n <= budget.cap;
    check_cap(0, budget.cap);
    Verdict v;
    auto& steps = v.justification;

    // Complete reachability.
    std::optional<bool> reachable;
    if (auto don = don_precondition(aut)) {
        std::ostringstream os;
        os << "a=" << aut.letter_name(don->a) << " b=" << aut.letter_name(don->b) << " s=" << don->s
           << " t=" << don->t << " d=" << don->d;
        steps.push_back({"don", true, os.str()});
        reachable = true;
    } else if (exact_ok) {
        const ReachResult rr = is_completely_reachable(aut, budget.cap);
        steps.push_back({"reachability", rr.ok, rr.ok ? "every nonempty subset reached"
                                                      : "unreached " + rr.missing->to_string()});
        reachable = rr.ok;
    } else {
        steps.push_back({"reachability", false, "no certificate and n exceeds cap " + std::to_string(budget.cap)});
    }

    if (reachable == false) {
        // Only reached with n <= cap, so the exact value is affordable.
        v.sc_claimed = syn_state_complexity(aut, budget.cap);
        if (is_strongly_connected(aut)) {
            steps.push_back({"lemma2", true, "strongly connected but not completely reachable, so sc < 2^n - n"});
            v.max_sc = MaxSc::refuted;
        } else if (*v.sc_claimed < max_syn_state_complexity(n)) {
            steps.push_back({"exact-sc", true, "sc = " + std::to_string(*v.sc_claimed) + " < 2^n - n"});
            v.max_sc = MaxSc::refuted;
        } else {
            steps.push_back({"exact-sc", true, "sc = 2^n - n, yet not completely reachable; no certificate applies"});
        }
        return v;
    }

    // Distinguishability of 2-sets.
    std::optional<bool> distinct;
    if (n <= 2) {
        steps.push_back({"2sets", true, "at most one 2-set"});
        distinct = true;
    } else if (run_criteria(aut, budget, steps)) {
        distinct = true;
    } else if (budget.use_oracle) {
        v.oracle_used = true;
        if (exact_ok) {
            const TwoSetResult ts = all_2sets_distinguishable(aut, budget.cap);
            std::string detail = "every pair of 2-sets distinguishable";
            if (!ts.ok) {
                detail = ts.witness->first.to_string() + " ~ " + ts.witness->second.to_string();
            }
            steps.push_back({"oracle-2sets", ts.ok, detail});
            distinct = ts.ok;
            // Without a cyclic letter, distinguishable 2-sets do not force
            // maximality (e.g. n = 3, delta = [[1,2,0],[2,2,1],[2,0,1]]:
            // Q and {0,2} agree on every letter). Settle it exactly.
            if (ts.ok && !is_circular(aut)) {
                const std::uint64_t sc = syn_state_complexity(aut, budget.cap);
                const bool maximal = sc == max_syn_state_complexity(n);
                steps.push_back({"exact-sc", maximal, "sc = " + std::to_string(sc)});
                if (!maximal) {
                    v.max_sc = MaxSc::refuted;
                    v.sc_claimed = sc;
                    return v;
                }
            }
        } else {
            steps.push_back({"oracle-2sets", false, "n exceeds cap " + std::to_string(budget.cap)});
        }
    }

    if (reachable == true && distinct == true) {
        steps.push_back({"lemma1", true, "complete reachability and distinguishable 2-sets"});
        v.max_sc = MaxSc::proved;
        v.sc_claimed = max_syn_state_complexity(n);
    } else if (reachable == true && distinct == false) {
        steps.push_back({"lemma1", true, "two 2-sets are equivalent, so sc < 2^n - n"});
        v.max_sc = MaxSc::refuted;
        v.sc_claimed = syn_state_complexity(aut, budget.cap);
    }
    return v;
}

} // namespace syncro
