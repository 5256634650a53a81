#include "eulervol/cli.hpp"

int main(int argc, char** argv) { return eulervol::cli::run_main(argc, argv); }
