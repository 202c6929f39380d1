#include <iostream>

#include "rigidity_cli/commands.hpp"

int main(int argc, char** argv) { return rigidity::cli::run(argc, argv, std::cout, std::cerr); }
