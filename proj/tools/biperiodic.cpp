#include <iostream>

#include "biperiodic/cli.hpp"

int main(int argc, char** argv) { return biperiodic::cli::run(argc, argv, std::cout, std::cerr); }
