#include <iostream>

#include "rcv/cli.hpp"

int main(int argc, char** argv) { return rcv::run_cli(argc, argv, std::cout, std::cerr); }
