#include <iostream>

#include "intersum/cli.hpp"

int main(int argc, char** argv) { return intersum::run_cli(argc, argv, std::cout, std::cerr); }
