#include <iostream>

#include "strops/cli.hpp"

int main(int argc, char** argv) { return strops::cli::run_cli(argc, argv, std::cout, std::cerr); }
