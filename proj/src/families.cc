/* families.cc -- Family constructors.
 */

#include "syncro/families.hh"

#include <vector>

namespace syncro {

const char* to_string(Family f) {
    switch (f) {
    case Family::cerny: return "cerny";
    case Family::L: return "L";
    case Family::V: return "V";
    case Family::F: return "F";
    case Family::K: return "K";
    case Family::fig3: return "fig3";
    case Family::gc_footnote: return "gc_footnote";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "cerny" || name == "C") { return Family::cerny; }
    if (name == "L") { return Family::L; }
    if (name == "V") { return Family::V; }
    if (name == "F") { return Family::F; }
    if (name == "K") { return Family::K; }
    if (name == "fig3") { return Family::fig3; }
    if (name == "gc_footnote" || name == "footnote") { return Family::gc_footnote; }
    return std::nullopt;
}

std::optional<std::size_t> fixed_size(Family f) {
    switch (f) {
    case Family::fig3: return 4;
    case Family::gc_footnote: return 3;
    default: return std::nullopt;
    }
}

namespace {

void require(bool cond, Family f, const std::string& what) {
    if (!cond) { throw AutomatonError(std::string("family ") + to_string(f) + ": " + what); }
}

SemiAutomaton from_actions(const std::vector<State>& a, const std::vector<State>& b) {
    std::vector<std::vector<State>> delta;
    for (std::size_t q = 0; q < a.size(); ++q) { delta.push_back({a[q], b[q]}); }
    return make_automaton(a.size(), 2, delta, {"a", "b"});
}

} // namespace

SemiAutomaton build_family(const FamilySpec& spec) {
    const Family f = spec.family;
    if (f == Family::fig3) { return from_actions({1, 2, 1, 3}, {1, 2, 3, 0}); }
    if (f == Family::gc_footnote) { return from_actions({1, 0, 2}, {0, 2, 1}); }

    const std::size_t n = spec.n;
    std::vector<State> a(n), b(n);
    for (State i = 0; i < n; ++i) {
        a[i] = i;
        b[i] = static_cast<State>((i + 1) % n);
    }
    switch (f) {
    case Family::cerny:
        require(n >= 2, f, "n must be at least 2");
        a[n - 1] = 0;
        break;
    case Family::L:
    case Family::V:
        require(n >= 3, f, "n must be at least 3");
        for (State i = 0; i + 3 <= n; ++i) { a[i] = i + 1; }
        a[n - 2] = 0;
        a[n - 1] = f == Family::L ? 1 : 0;
        break;
    case Family::F:
        require(n > 3 && n % 2 == 1, f, "n must be odd and > 3");
        a[n - 2] = 0;
        break;
    case Family::K:
        require(n > 5, f, "n must be > 5");
        for (State i = 1; i + 3 <= n; ++i) { a[i] = i + 1; }
        a[n - 1] = 0;
        a[n - 2] = 1;
        a[0] = 3;
        break;
    default:
        break;
    }
    return from_actions(a, b);
}

} // namespace syncro
