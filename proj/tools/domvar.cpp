#include "domvar/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return domvar::run_cli(argc, argv, std::cout, std::cerr); }
