#include <iostream>

#include "genbeta/cli.hpp"

int main(int argc, char** argv) { return genbeta::cli::run(argc, argv, std::cout, std::cerr); }
