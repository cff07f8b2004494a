#include <iostream>

#include "tetra/cli/app.hpp"

int main(int argc, char** argv) { return tetra::cli::run(argc, argv, std::cout, std::cerr); }
