#include <iostream>

#include "corrdet/cli.hpp"

int main(int argc, char** argv) { return corrdet::cli::run(argc, argv, std::cout, std::cerr); }
