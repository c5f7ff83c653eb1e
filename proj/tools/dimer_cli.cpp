#include <iostream>

#include "dimer/commands.hpp"

int main(int argc, char** argv) { return dimer::cli::run(argc, argv, std::cout, std::cerr); }
