#include <iostream>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) { return cyclo::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
