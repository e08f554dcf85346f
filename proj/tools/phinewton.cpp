#include "phinewton/cli.hpp"

int main(int argc, char** argv) { return phinewton::cli::main(argc, argv); }
