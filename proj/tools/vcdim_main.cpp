#include "vcdim/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return vcdim::cli::main(argc, argv, std::cout, std::cerr); }
