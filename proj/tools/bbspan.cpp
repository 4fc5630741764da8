#include <iostream>

#include "bbspan/cli.hpp"

int main(int argc, char** argv) { return bbspan::run_cli(argc, argv, std::cout, std::cerr); }
