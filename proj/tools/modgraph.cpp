#include <iostream>

#include "modgraph/commands.hpp"

int main(int argc, char** argv) { return modgraph::cli::run(argc, argv, std::cout, std::cerr); }
