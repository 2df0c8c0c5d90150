#include "cli/commands.hpp"

int main(int argc, char** argv) { return convinv::cli::run_main(argc, argv); }
