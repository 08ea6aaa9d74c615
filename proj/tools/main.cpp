#include <iostream>

#include "tscolor/cli.hpp"

int main(int argc, char** argv) { return tscolor::cli::run(argc, argv, std::cout, std::cerr); }
