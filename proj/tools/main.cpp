#include <iostream>

#include "hs2/cli.hpp"

int main(int argc, char** argv) { return hs2::cli::run(argc, argv, std::cout, std::cerr); }
