#include <iostream>

#include "abcq/cli.hpp"

int main(int argc, char** argv) { return abcq::cli_main(argc, argv, std::cout, std::cerr); }
