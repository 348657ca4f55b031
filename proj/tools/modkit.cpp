#include <iostream>

#include "modkit/cli.hpp"

int main(int argc, char** argv) { return modkit::cli::main_entry(argc, argv, std::cout, std::cerr); }
