#include <iostream>

#include "hfib/cli.hpp"

int main(int argc, char** argv) { return hfib::cli::run(argc, argv, std::cout, std::cerr); }
