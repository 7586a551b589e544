#include <iostream>

#include "gridcc/cli.hpp"

int main(int argc, char** argv) { return gridcc::cli::run(argc, argv, std::cout, std::cerr); }
