/* report.cc -- Assembling and rendering analysis reports.
 */

#include "cli/report.hh"

#include <chrono>
#include <sstream>

#include "syncro/structure.hh"

namespace syncro::cli {

using nlohmann::ordered_json;

namespace {

class Stopwatch {
public:
    explicit Stopwatch(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}
    void lap(const std::string& phase) {
        const auto now = std::chrono::steady_clock::now();
        sink_.emplace_back(phase, std::chrono::duration<double, std::milli>(now - last_).count());
        last_ = now;
    }

private:
    std::vector<std::pair<std::string, double>>& sink_;
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

} // namespace

Report analyze(const SemiAutomaton& aut, const std::string& name, const AnalyzeOptions& opt) {
    check_cap(0, opt.cap);
    const std::size_t n = aut.num_states();
    const bool exact = n <= opt.cap;
    Report rep;
    std::vector<std::pair<std::string, double>> laps;
    Stopwatch clock(laps);

    rep.name = name;
    rep.n = n;
    for (Letter a = 0; a < aut.num_letters(); ++a) { rep.letters.push_back({aut.letter_name(a), aut.letter_action(a)}); }
    rep.strongly_connected = is_strongly_connected(aut);

    std::vector<Word> cyclic;
    if (auto c = find_cyclic_letter(aut)) {
        rep.circular_kind = "letter";
        rep.circular_witness = aut.letter_name(*c);
        for (Letter x = 0; x < aut.num_letters(); ++x) {
            if (aut.letter_action(x).is_cyclic()) { cyclic.push_back(Word{x}); }
        }
    } else if (auto w = find_cyclic_word(aut)) {
        rep.circular_kind = "word";
        rep.circular_witness = format_word(aut, *w);
        cyclic.push_back(*w);
    } else {
        rep.circular_kind = "none-within-budget";
    }
    clock.lap("structure");

    if (auto don = don_precondition(aut)) {
        rep.reachable = true;
        rep.reach_certificate = "don";
        rep.reach_detail = "a=" + aut.letter_name(don->a) + " b=" + aut.letter_name(don->b) +
                           " s=" + std::to_string(don->s) + " t=" + std::to_string(don->t) +
                           " d=" + std::to_string(don->d);
    } else if (exact) {
        const ReachResult rr = is_completely_reachable(aut, opt.cap);
        rep.reachable = rr.ok;
        rep.reach_certificate = "exact";
        rep.reach_detail = rr.ok ? "every nonempty subset reached" : "unreached " + rr.missing->to_string();
    } else {
        rep.reach_certificate = "none";
        rep.reach_detail = "n exceeds cap " + std::to_string(opt.cap);
    }
    clock.lap("reachability");

    if (exact) {
        rep.sc = syn_state_complexity(aut, opt.cap);
        rep.sc_kind = "exact";
        rep.reset_known = true;
        if (auto w = shortest_reset(aut, opt.cap)) {
            rep.shortest_reset = format_word(aut, *w);
            rep.reset_length = w->size();
        }
        clock.lap("power automaton");
    }

    for (const auto& def : rank_profile(aut).defects) {
        const Word a{def.letter};
        for (const Word& b : cyclic) {
            const std::string an = format_word(aut, a), bn = format_word(aut, b);
            rep.criteria.push_back({"theorem1", an, bn, theorem1_check(aut, a, b)});
            rep.criteria.push_back({"corollary", an, bn, corollary_word_check(aut, a, b)});
            rep.criteria.push_back({"half-cycle", an, bn, half_cycle_check(aut, a, b)});
        }
    }
    clock.lap("criteria");

    rep.verdict = verdict(aut, VerdictBudget{opt.word_budget, opt.oracle, opt.cap});
    clock.lap("verdict");

    if (!exact) {
        if (rep.verdict.max_sc == MaxSc::proved) {
            rep.sc = rep.verdict.sc_claimed;
            rep.sc_kind = "proved";
        } else {
            rep.sc = max_syn_state_complexity(n);
            rep.sc_kind = "bound-only";
        }
    }
    if (opt.timings) { rep.timings_ms = std::move(laps); }
    return rep;
}

ordered_json criterion_json(const CriterionResult& res) {
    ordered_json j;
    j["satisfied"] = res.satisfied;
    if (res.witness) {
        const auto& w = *res.witness;
        ordered_json wj;
        wj["q"] = w.q;
        wj["d"] = w.d;
        wj["s_offset"] = w.s_offset;
        ordered_json steps = ordered_json::array();
        for (const auto& st : w.per_m) {
            ordered_json sj;
            sj["m"] = st.m;
            sj["case"] = to_string(st.eq);
            if (st.r) { sj["r"] = *st.r; }
            steps.push_back(sj);
        }
        wj["per_m"] = steps;
        if (w.boundary_holds) { wj["boundary_holds"] = *w.boundary_holds; }
        j["witness"] = wj;
    }
    if (!res.reason.empty()) { j["reason"] = res.reason; }
    if (!res.detail.empty()) { j["detail"] = res.detail; }
    return j;
}

ordered_json report_json(const Report& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["n"] = rep.n;
    ordered_json letters = ordered_json::array();
    for (const auto& l : rep.letters) {
        ordered_json lj;
        lj["name"] = l.name;
        lj["rank"] = l.action.rank();
        lj["image"] = std::vector<State>(l.action.image().begin(), l.action.image().end());
        lj["cyclic"] = l.action.is_cyclic();
        letters.push_back(lj);
    }
    j["rank_profile"] = letters;
    j["strongly_connected"] = rep.strongly_connected;
    j["circularity"] = {{"kind", rep.circular_kind}, {"witness", rep.circular_witness}};

    ordered_json reach;
    reach["holds"] = rep.reachable ? ordered_json(*rep.reachable) : ordered_json(nullptr);
    reach["certificate"] = rep.reach_certificate;
    reach["detail"] = rep.reach_detail;
    j["complete_reachability"] = reach;

    j["sc"] = {{"value", rep.sc ? ordered_json(*rep.sc) : ordered_json(nullptr)}, {"kind", rep.sc_kind}};
    if (rep.reset_known) {
        ordered_json r;
        r["word"] = rep.shortest_reset ? ordered_json(*rep.shortest_reset) : ordered_json(nullptr);
        if (rep.shortest_reset) { r["length"] = rep.reset_length; }
        j["shortest_reset"] = r;
    }

    ordered_json crit = ordered_json::array();
    for (const auto& c : rep.criteria) {
        ordered_json cj;
        cj["check"] = c.check;
        cj["a"] = c.a;
        cj["b"] = c.b;
        cj.update(criterion_json(c.result));
        crit.push_back(cj);
    }
    j["criteria"] = crit;

    ordered_json v;
    v["max_sc"] = to_string(rep.verdict.max_sc);
    v["sc_claimed"] = rep.verdict.sc_claimed ? ordered_json(*rep.verdict.sc_claimed) : ordered_json(nullptr);
    v["oracle_used"] = rep.verdict.oracle_used;
    ordered_json steps = ordered_json::array();
    for (const auto& s : rep.verdict.justification) {
        steps.push_back({{"rule", s.rule}, {"holds", s.holds}, {"detail", s.detail}});
    }
    v["justification"] = steps;
    j["verdict"] = v;

    if (!rep.timings_ms.empty()) {
        ordered_json t;
        for (const auto& [phase, ms] : rep.timings_ms) { t[phase] = ms; }
        j["timings_ms"] = t;
    }
    return j;
}

std::string report_text(const Report& rep) {
    std::ostringstream os;
    os << "automaton " << rep.name << ": n=" << rep.n << ", k=" << rep.letters.size() << "\n";
    for (const auto& l : rep.letters) {
        os << "  " << l.name << "  rank " << l.action.rank() << "  " << l.action.to_string()
           << (l.action.is_cyclic() ? "  cyclic" : "") << "\n";
    }
    os << "strongly connected: " << (rep.strongly_connected ? "yes" : "no") << "\n";
    os << "circular: " << rep.circular_kind;
    if (!rep.circular_witness.empty()) { os << " " << rep.circular_witness; }
    os << "\n";
    os << "completely reachable: " << (rep.reachable ? (*rep.reachable ? "yes" : "no") : "unknown") << " ["
       << rep.reach_certificate << "] " << rep.reach_detail << "\n";
    os << "sc(Syn): " << (rep.sc ? std::to_string(*rep.sc) : "?") << " [" << rep.sc_kind << "]";
    os << "  (2^n - n = " << max_syn_state_complexity(rep.n) << ")\n";
    if (rep.reset_known) {
        os << "shortest reset: ";
        if (rep.shortest_reset) {
            os << *rep.shortest_reset << " (length " << rep.reset_length << ")\n";
        } else {
            os << "none, not synchronizing\n";
        }
    }
    for (const auto& c : rep.criteria) {
        os << c.check << " a=" << c.a << " b=" << c.b << ": ";
        if (c.result.satisfied) {
            os << "satisfied";
            if (c.result.witness) {
                os << " q=" << c.result.witness->q;
                if (c.check != "half-cycle") { os << " d=" << c.result.witness->d; }
                for (const auto& st : c.result.witness->per_m) {
                    if (st.r) { os << " m=" << st.m << ":" << to_string(st.eq) << "(r=" << *st.r << ")"; }
                }
            }
        } else {
            os << "fails, " << c.result.reason;
            if (!c.result.detail.empty()) { os << " (" << c.result.detail << ")"; }
        }
        os << "\n";
    }
    os << "verdict: " << to_string(rep.verdict.max_sc);
    if (rep.verdict.sc_claimed) { os << ", sc = " << *rep.verdict.sc_claimed; }
    if (rep.verdict.oracle_used) { os << ", oracle used"; }
    os << "\n";
    for (const auto& s : rep.verdict.justification) {
        os << "  " << (s.holds ? "+ " : "- ") << s.rule << ": " << s.detail << "\n";
    }
    for (const auto& [phase, ms] : rep.timings_ms) { os << "time " << phase << ": " << ms << " ms\n"; }
    return os.str();
}

} // namespace syncro::cli
