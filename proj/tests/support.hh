/* support.hh -- Small helpers shared by the unit tests.
 */

#ifndef SYNCRO_TESTS_SUPPORT_HH_
#define SYNCRO_TESTS_SUPPORT_HH_

#include <cctype>
#include <string>
#include <vector>

#include "syncro/core.hh"

namespace syncro::test {

/// Expands "b^2ab^3" style words over single-character letter names.
inline Word expand(const SemiAutomaton& aut, const std::string& text) {
    Word w;
    for (std::size_t i = 0; i < text.size();) {
        const Letter x = *aut.find_letter(std::string(1, text[i++]));
        std::size_t count = 1;
        if (i < text.size() && text[i] == '^') {
            std::size_t j = ++i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) { ++j; }
            count = std::stoul(text.substr(i, j - i));
            i = j;
        }
        for (std::size_t c = 0; c < count; ++c) { w.push_back(x); }
    }
    return w;
}

inline Transformation tr(std::vector<State> image) { return Transformation(std::move(image)); }

} // namespace syncro::test

#endif // SYNCRO_TESTS_SUPPORT_HH_
