#include <iostream>

#include "toricnash_cli/cli.hpp"

int main(int argc, char** argv) { return toricnash::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
