#include <iostream>

#include "discmom/cli.hpp"

int main(int argc, char** argv) { return discmom::cli::main_entry(argc, argv, std::cout, std::cerr); }
