#include <iostream>

#include "mesur/cli/cli.hpp"

int main(int argc, char** argv) { return mesur::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
