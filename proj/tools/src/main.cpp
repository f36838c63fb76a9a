#include <iostream>

#include "edgering_cli/cli.hpp"

int main(int argc, char** argv) { return edgering::cli::run(argc, argv, std::cout, std::cerr); }
