#include <iostream>

#include "deckclass_cli/cli.hpp"

int main(int argc, char** argv) { return deckclass::cli::run(argc, argv, std::cout, std::cerr); }
