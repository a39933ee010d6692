#include <iostream>

#include "ecosense/harness/cli.hpp"

int main(int argc, char** argv) { return ecosense::harness::run_cli(argc, argv, std::cout, std::cerr); }
