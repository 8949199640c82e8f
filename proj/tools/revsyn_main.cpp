#include <iostream>

#include "revsyn/cli.hpp"

int main(int argc, char** argv) { return revsyn::run_cli(argc, argv, std::cout, std::cerr); }
