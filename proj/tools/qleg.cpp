#include "qleg/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qleg::cli::main_entry(argc, argv, std::cout, std::cerr); }
