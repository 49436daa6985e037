#include <iostream>

#include "kkg/cli.hpp"

int main(int argc, char** argv) { return kkg::cli::run(argc, argv, std::cout, std::cerr); }
