#include <iostream>

#include "planefill/cli.hpp"

int main(int argc, char** argv) { return planefill::cli::run(argc, argv, std::cout, std::cerr); }
