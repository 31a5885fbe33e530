#include "spectral/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return spectral::cli::main_entry(argc, argv, std::cout, std::cerr);
}
