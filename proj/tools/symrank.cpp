#include <iostream>

#include "symrank/cli.hpp"

int main(int argc, char** argv) { return symrank::cli::run(argc, argv, std::cout, std::cerr); }
