#include <iostream>

#include "lgmk/cli.hpp"

int main(int argc, char** argv) { return lgmk::cli::run(argc, argv, std::cout, std::cerr); }
