/* io.cc -- Document parsing with positioned diagnostics.
 */

#include "cli/io.hh"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace syncro::cli {

using nlohmann::json;

namespace {

std::string position_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void field_error(const std::string& origin, const std::string& field, const std::string& what) {
    throw DocumentError(origin + ": field '" + field + "': " + what);
}

std::size_t get_count(const json& j, const std::string& origin, const std::string& field) {
    if (!j.is_number_unsigned()) { field_error(origin, field, "expected a non-negative integer, got " + j.dump()); }
    return j.get<std::size_t>();
}

} // namespace

AutomatonDocument parse_document(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        // e.byte is one past the offending character.
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        std::string msg = e.what();
        if (auto p = msg.find("syntax error"); p != std::string::npos) { msg = msg.substr(p); }
        throw DocumentError(origin + ":" + position_of(text, at) + ": " + msg);
    }
    if (!j.is_object()) { throw DocumentError(origin + ": expected a JSON object at top level"); }

    for (const auto& [key, value] : j.items()) {
        if (key != "n" && key != "alphabet" && key != "delta" && key != "name" && key != "source") {
            field_error(origin, key, "unknown field");
        }
    }
    for (const char* key : {"n", "alphabet", "delta"}) {
        if (!j.contains(key)) { field_error(origin, key, "missing"); }
    }

    AutomatonDocument doc;
    doc.n = get_count(j["n"], origin, "n");
    if (doc.n == 0) { field_error(origin, "n", "must be positive"); }

    const json& alpha = j["alphabet"];
    if (!alpha.is_array() || alpha.empty()) { field_error(origin, "alphabet", "expected a nonempty array of names"); }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const std::string f = "alphabet[" + std::to_string(i) + "]";
        if (!alpha[i].is_string() || alpha[i].get<std::string>().empty()) {
            field_error(origin, f, "expected a nonempty string");
        }
        doc.alphabet.push_back(alpha[i].get<std::string>());
        for (std::size_t j2 = 0; j2 < i; ++j2) {
            if (doc.alphabet[j2] == doc.alphabet[i]) { field_error(origin, f, "duplicate letter name"); }
        }
    }
    const std::size_t k = doc.alphabet.size();

    const json& delta = j["delta"];
    if (!delta.is_array()) { field_error(origin, "delta", "expected an array of rows"); }
    if (delta.size() != doc.n) {
        field_error(origin, "delta", "expected " + std::to_string(doc.n) + " rows, got " + std::to_string(delta.size()));
    }
    for (std::size_t q = 0; q < doc.n; ++q) {
        const std::string row = "delta[" + std::to_string(q) + "]";
        if (!delta[q].is_array() || delta[q].size() != k) {
            field_error(origin, row, "expected an array of " + std::to_string(k) + " targets");
        }
        std::vector<State> targets;
        for (std::size_t a = 0; a < k; ++a) {
            const std::string f = row + "[" + std::to_string(a) + "]";
            const std::size_t t = get_count(delta[q][a], origin, f);
            if (t >= doc.n) {
                field_error(origin, f, "target " + std::to_string(t) + " outside 0.." + std::to_string(doc.n - 1));
            }
            targets.push_back(static_cast<State>(t));
        }
        doc.delta.push_back(std::move(targets));
    }

    for (const char* key : {"name", "source"}) {
        if (!j.contains(key)) { continue; }
        if (!j[key].is_string()) { field_error(origin, key, "expected a string"); }
        (std::string(key) == "name" ? doc.name : doc.source) = j[key].get<std::string>();
    }
    return doc;
}

std::string serialize_document(const AutomatonDocument& doc) {
    // Rows on separate lines keep diffs readable.
    std::ostringstream os;
    os << "{\n";
    if (doc.name) { os << "  \"name\": " << json(*doc.name).dump() << ",\n"; }
    if (doc.source) { os << "  \"source\": " << json(*doc.source).dump() << ",\n"; }
    os << "  \"n\": " << doc.n << ",\n";
    os << "  \"alphabet\": " << json(doc.alphabet).dump() << ",\n";
    os << "  \"delta\": [\n";
    for (std::size_t q = 0; q < doc.delta.size(); ++q) {
        os << "    " << json(doc.delta[q]).dump() << (q + 1 < doc.delta.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

SemiAutomaton to_automaton(const AutomatonDocument& doc) {
    return make_automaton(doc.n, doc.alphabet.size(), doc.delta, doc.alphabet);
}

AutomatonDocument to_document(const SemiAutomaton& aut, std::optional<std::string> name,
                              std::optional<std::string> source) {
    return AutomatonDocument{aut.num_states(), aut.letter_names(), aut.table(), std::move(name), std::move(source)};
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path);
    if (!in) { throw DocumentError(path + ": cannot open"); }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace syncro::cli
