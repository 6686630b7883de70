#include <iostream>

#include "linfty/cli.hpp"

int main(int argc, char** argv) { return linf::cli::run(argc, argv, std::cout, std::cerr); }
