#include "sympack/cli.hpp"

int main(int argc, char** argv) { return sympack::cli::run(argc, argv); }
