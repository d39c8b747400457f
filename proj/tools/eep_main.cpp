#include <iostream>

#include "eep/cli.hpp"

int main(int argc, char** argv) { return eep::cli_main(argc, argv, std::cout, std::cerr); }
