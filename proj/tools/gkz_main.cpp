#include "gkz/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gkz::cli::main(argc, argv, std::cin, std::cout, std::cerr); }
