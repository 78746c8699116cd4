/* commands.hh -- Entry point of the syncro command line tool.
 *
 * Exit status: 0 proved or completed, 1 input or constraint error,
 * 2 verdict unknown (analyze, family) or failing suite (crosscheck).
 */

#ifndef SYNCRO_CLI_COMMANDS_HH_
#define SYNCRO_CLI_COMMANDS_HH_

namespace syncro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUnknown = 2;

int run(int argc, char** argv);

} // namespace syncro::cli

#endif // SYNCRO_CLI_COMMANDS_HH_
