#include "richelot/cli.hpp"

#include <iostream>

int main(int argc, char **argv) { return richelot::cli::run(argc, argv, std::cout, std::cerr); }
