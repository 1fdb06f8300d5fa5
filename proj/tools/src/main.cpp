#include <iostream>

#include "fockbound_cli/cli.hpp"

int main(int argc, char** argv) { return fockbound::cli::run_cli(argc, argv, std::cout, std::cerr); }
