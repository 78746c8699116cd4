/* commands.cc -- Subcommands: analyze, family, rank-words, export-dot,
 * crosscheck.
 */

#include "cli/commands.hh"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/crosscheck.hh"
#include "cli/dot.hh"
#include "cli/io.hh"
#include "cli/report.hh"
#include "syncro/families.hh"

namespace syncro::cli {

namespace {

struct Common {
    std::string format = "text";
    unsigned cap = kDefaultCap;
};

unsigned default_cap() {
    if (const char* env = std::getenv("SYNCRO_CAP")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "syncro: ignoring SYNCRO_CAP=" << env << "\n";
        }
    }
    return kDefaultCap;
}

void check_user_cap(unsigned cap) {
    if (cap > kMaxCap) {
        throw std::invalid_argument("cap " + std::to_string(cap) + " above the hard limit " + std::to_string(kMaxCap));
    }
    if (cap > kDefaultCap) {
        std::cerr << "syncro: cap " << cap << " admits power automata of about "
                  << (estimate_power_memory(cap, 2) >> 20) << " MiB per 2 letters\n";
    }
}

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
}

void add_cap(CLI::App* cmd, Common& c) {
    cmd->add_option("--cap", c.cap, "Largest n for explicit power automata (SYNCRO_CAP)");
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) { throw DocumentError(path + ": cannot write"); }
    out << text;
}

struct Loaded {
    SemiAutomaton aut;
    std::string name;
};

Loaded load(const std::string& input) {
    const std::string origin = input.empty() || input == "-" ? "<stdin>" : input;
    const AutomatonDocument doc = parse_document(read_input(input), origin);
    return {to_automaton(doc), doc.name.value_or(origin)};
}

int emit_report(const SemiAutomaton& aut, const std::string& name, const AnalyzeOptions& opt, const Common& c) {
    const Report rep = analyze(aut, name, opt);
    if (c.format == "structured") {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        std::cout << report_text(rep);
    }
    return rep.verdict.max_sc == MaxSc::unknown ? kExitUnknown : kExitOk;
}

std::string family_label(const FamilySpec& spec) {
    std::string label = to_string(spec.family);
    if (!fixed_size(spec.family)) { label += "_" + std::to_string(spec.n); }
    return label;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"syncro: synchronizing words, power automata and the state complexity of Syn(A)"};
    app.require_subcommand(1);

    Common common;
    common.cap = default_cap();
    AnalyzeOptions aopt;
    std::string input = "-";

    auto add_analyze_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--oracle", aopt.oracle, "Fall back to the exact 2-set check when the criteria fail");
        cmd->add_option("--word-budget", aopt.word_budget, "Longest rank n-1 word tried (default 2n+2)");
        cmd->add_flag("--timings", aopt.timings, "Report phase timings");
        add_cap(cmd, common);
        add_format(cmd, common);
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze an automaton document");
    analyze_cmd->add_option("input", input, "Document path, - for stdin");
    add_analyze_flags(analyze_cmd);

    std::string family_name;
    std::size_t family_n = 0;
    std::string out_path;
    auto* family_cmd = app.add_subcommand("family", "Build and analyze a named family member");
    family_cmd->add_option("name", family_name, "cerny, L, V, F, K, fig3, gc_footnote")->required();
    family_cmd->add_option("--n", family_n, "Number of states");
    family_cmd->add_option("--out", out_path, "Also write the automaton document here");
    add_analyze_flags(family_cmd);

    std::optional<std::size_t> rank;
    std::size_t max_len = 0;
    auto* rank_cmd = app.add_subcommand("rank-words", "One shortest word per transformation of a given rank");
    rank_cmd->add_option("input", input, "Document path, - for stdin");
    rank_cmd->add_option("--rank", rank, "Target rank (default n-1)");
    rank_cmd->add_option("--max-len", max_len, "Longest word (default 2n+2)");
    add_format(rank_cmd, common);

    std::string target = "automaton";
    auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz output of the automaton or its power automaton");
    dot_cmd->add_option("input", input, "Document path, - for stdin");
    dot_cmd->add_option("--target", target, "automaton or power")->check(CLI::IsMember({"automaton", "power"}));
    dot_cmd->add_option("--out", out_path, "Output path (default stdout)");
    add_cap(dot_cmd, common);

    CrosscheckOptions copt;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Randomized agreement suites against the oracle");
    cross_cmd->add_option("--samples", copt.samples, "Number of samples");
    cross_cmd->add_option("--seed", copt.seed, "Corpus seed");
    cross_cmd->add_option("--nmax", copt.nmax, "Largest state count (at most 12)");
    add_format(cross_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (analyze_cmd->parsed() || family_cmd->parsed()) {
            check_user_cap(common.cap);
            aopt.cap = common.cap;
        }
        if (*analyze_cmd) {
            const Loaded in = load(input);
            return emit_report(in.aut, in.name, aopt, common);
        }
        if (*family_cmd) {
            const auto fam = parse_family(family_name);
            if (!fam) { throw std::invalid_argument("unknown family '" + family_name + "'"); }
            const FamilySpec spec{*fam, family_n};
            const SemiAutomaton aut = build_family(spec);
            const std::string label = family_label(spec);
            if (!out_path.empty()) { write_out(out_path, serialize_document(to_document(aut, label, "family"))); }
            return emit_report(aut, label, aopt, common);
        }
        if (*rank_cmd) {
            const Loaded in = load(input);
            const std::size_t n = in.aut.num_states();
            const std::size_t r = rank.value_or(n > 1 ? n - 1 : 1);
            const auto words = enumerate_rank_words(in.aut, r, max_len);
            if (common.format == "structured") {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const auto& w : words) {
                    nlohmann::ordered_json row;
                    row["word"] = format_word(in.aut, w.word);
                    row["compact"] = format_word_compact(in.aut, w.word);
                    row["length"] = w.word.size();
                    row["transformation"] =
                        std::vector<State>(w.transformation.image().begin(), w.transformation.image().end());
                    rows.push_back(row);
                }
                nlohmann::ordered_json j;
                j["name"] = in.name;
                j["rank"] = r;
                j["words"] = rows;
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& w : words) {
                    std::cout << format_word_compact(in.aut, w.word) << "\t" << w.transformation.to_string() << "\n";
                }
            }
            return kExitOk;
        }
        if (*dot_cmd) {
            check_user_cap(common.cap);
            const Loaded in = load(input);
            write_out(out_path, target == "power" ? power_dot(in.aut, in.name, common.cap)
                                                  : automaton_dot(in.aut, in.name));
            return kExitOk;
        }
        if (*cross_cmd) {
            const auto results = crosscheck(copt);
            bool all = true;
            if (common.format == "structured") {
                nlohmann::ordered_json rows = nlohmann::ordered_json::array();
                for (const auto& r : results) {
                    nlohmann::ordered_json row;
                    row["suite"] = r.name;
                    row["checked"] = r.checked;
                    row["passed"] = r.passed;
                    if (r.counterexample) { row["counterexample"] = nlohmann::ordered_json::parse(*r.counterexample); }
                    rows.push_back(row);
                }
                std::cout << rows.dump(2) << "\n";
            }
            for (const auto& r : results) {
                all = all && r.ok();
                if (common.format == "text") {
                    std::cout << (r.ok() ? "pass " : "FAIL ") << r.name << " " << r.passed << "/" << r.checked << "\n";
                    if (r.counterexample) { std::cout << *r.counterexample; }
                }
            }
            return all ? kExitOk : kExitUnknown;
        }
    } catch (const std::exception& e) {
        std::cerr << "syncro: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

} // namespace syncro::cli
