#include <iostream>

#include "srpt_cli/cli.hpp"

int main(int argc, char** argv) { return srpt::cli::run(argc, argv, std::cout, std::cerr); }
