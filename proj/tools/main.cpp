#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return polyzeta::cli::run(argc, argv, std::cout, std::cerr); }
