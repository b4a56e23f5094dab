#include <iostream>

#include "abn/cli.hpp"

int main(int argc, char** argv) { return abn::run_cli(argc, argv, std::cout, std::cerr); }
