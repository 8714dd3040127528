#include <iostream>

#include "gtrace/cli.hpp"

int main(int argc, char** argv) { return gtrace::cli::run(argc, argv, std::cout, std::cerr); }
