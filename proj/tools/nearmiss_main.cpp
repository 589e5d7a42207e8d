#include "nearmiss/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return nearmiss::run_cli(argc, argv, std::cout, std::cerr);
}
