#include "vulnmap/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vulnmap::run_cli(argc, argv, std::cout, std::cerr); }
