#include "bmw/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return bmw::runCommand(argc, argv, std::cout, std::cerr); }
