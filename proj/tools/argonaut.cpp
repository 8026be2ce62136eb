#include <iostream>

#include "argonaut/cli.hpp"

int main(int argc, char** argv) { return argonaut::cli_run(argc, argv, std::cout, std::cerr); }
