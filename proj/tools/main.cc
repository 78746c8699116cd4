#include "cli/commands.hh"

int main(int argc, char** argv) { return syncro::cli::run(argc, argv); }
