#include "arratlas/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return arratlas::cli::run(argc, argv, std::cout, std::cerr);
}
