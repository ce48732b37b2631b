#include <dtoric/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return dtoric::cli::run(argc, argv, std::cout, std::cerr); }
