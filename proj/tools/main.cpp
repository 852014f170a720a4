#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return k3::cli::run(argc, argv, std::cout, std::cerr); }
