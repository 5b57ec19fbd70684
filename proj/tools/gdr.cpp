#include "gdr/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gdr::cli::run(argc, argv, std::cout, std::cerr); }
