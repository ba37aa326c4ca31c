#include "lamkit/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return lamkit::cli_dispatch(argc, argv, std::cout, std::cerr); }
