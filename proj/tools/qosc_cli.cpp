#include "qosc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qosc::cli::run(argc, argv, std::cout, std::cerr); }
