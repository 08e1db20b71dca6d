#include <iostream>

#include "sturan/cli.hpp"

int main(int argc, char** argv) { return sturan::cli_main(argc, argv, std::cout, std::cerr); }
