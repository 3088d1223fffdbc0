#include <iostream>

#include "ccf/cli.hpp"

int main(int argc, char** argv) {
    return ccf::run_cli(argc, argv, std::cout, std::cerr);
}
