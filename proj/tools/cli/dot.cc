/* dot.cc -- DOT writers.
 */

#include "cli/dot.hh"

#include <sstream>

namespace syncro::cli {

namespace {

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') { out += '\\'; }
        out += c;
    }
    return out + "\"";
}

void header(std::ostringstream& os, const std::string& name) {
    os << "digraph " << quoted(name) << " {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
}

} // namespace

std::string automaton_dot(const SemiAutomaton& aut, const std::string& name) {
    std::ostringstream os;
    header(os, name);
    for (State q = 0; q < aut.num_states(); ++q) { os << "  q" << q << " [label=\"" << q << "\"];\n"; }
    for (State q = 0; q < aut.num_states(); ++q) {
        for (Letter a = 0; a < aut.num_letters(); ++a) {
            os << "  q" << q << " -> q" << aut.next(q, a) << " [label=" << quoted(aut.letter_name(a)) << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string power_dot(const SemiAutomaton& aut, const std::string& name, unsigned cap) {
    const PowerAutomaton p = PowerAutomaton::build(aut, PowerScope::reachable, cap);
    std::ostringstream os;
    header(os, name);
    for (std::size_t i = 0; i < p.size(); ++i) {
        os << "  n" << i << " [label=\"" << p.subset(i).to_string() << "\"";
        if (p.is_final(i)) { os << ", shape=doublecircle"; }
        os << "];\n";
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (Letter a = 0; a < aut.num_letters(); ++a) {
            os << "  n" << i << " -> n" << p.successor(i, a) << " [label=" << quoted(aut.letter_name(a)) << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace syncro::cli
