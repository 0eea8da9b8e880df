#include "hyperpath/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyperpath::run_cli(argc, argv, std::cout, std::cerr); }
