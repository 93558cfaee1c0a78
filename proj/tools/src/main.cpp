#include <iostream>

#include "thetakit_cli/cli.hpp"

int main(int argc, char** argv) { return thetakit::cli::run(argc, argv, std::cout, std::cerr); }
