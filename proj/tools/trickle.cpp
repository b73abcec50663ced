#include <iostream>

#include <trickle/cli.hpp>

int main(int argc, char** argv) { return trickle::cli::run(argc, argv, std::cout, std::cerr); }
