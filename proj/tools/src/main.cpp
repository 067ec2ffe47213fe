#include <iostream>

#include "wschub_cli/commands.hpp"

int main(int argc, char** argv) { return wschub::cli::run(argc, argv, std::cout, std::cerr); }
