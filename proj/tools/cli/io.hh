/* io.hh -- Automaton documents: JSON text <-> SemiAutomaton.
 *
 *   {"n": 3, "alphabet": ["a", "b"], "delta": [[1, 0], [0, 2], [2, 1]],
 *    "name": "...", "source": "..."}
 *
 * delta[state][letter]; name and source are optional.
 */

#ifndef SYNCRO_CLI_IO_HH_
#define SYNCRO_CLI_IO_HH_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "syncro/core.hh"

namespace syncro::cli {

/// Malformed document; the message carries a line:column or a field path.
class DocumentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AutomatonDocument {
    std::size_t n = 0;
    std::vector<std::string> alphabet;
    std::vector<std::vector<State>> delta;
    std::optional<std::string> name;
    std::optional<std::string> source;

    friend bool operator==(const AutomatonDocument&, const AutomatonDocument&) = default;
};

/// @p origin prefixes diagnostics (a path or "<stdin>").
AutomatonDocument parse_document(const std::string& text, const std::string& origin = "<input>");
std::string serialize_document(const AutomatonDocument& doc);

SemiAutomaton to_automaton(const AutomatonDocument& doc);
AutomatonDocument to_document(const SemiAutomaton& aut, std::optional<std::string> name = std::nullopt,
                              std::optional<std::string> source = std::nullopt);

/// Reads a file, or stdin for "-" or "".
std::string read_input(const std::string& path);

} // namespace syncro::cli

#endif // SYNCRO_CLI_IO_HH_
