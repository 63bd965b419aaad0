#include <iostream>

#include "gkostka/cli.hpp"

int main(int argc, char** argv) { return gkostka::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
