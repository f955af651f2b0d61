#include <iostream>

#include "frechet_jl/cli.hpp"

int main(int argc, char** argv) { return frechet_jl::cli::run(argc, argv, std::cout, std::cerr); }
