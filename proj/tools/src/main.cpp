#include <iostream>

#include "braidloom_cli/cli.hpp"

int main(int argc, char** argv) { return braidloom::cli::run(argc, argv, std::cout, std::cerr); }
