#include "c0t/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return c0t::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
