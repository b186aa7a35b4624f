#include <iostream>

#include "lctb/cli.hpp"

int main(int argc, char** argv) { return lctb::run_cli(argc, argv, std::cout, std::cerr); }
