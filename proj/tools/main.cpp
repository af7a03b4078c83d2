#include <iostream>

#include "noderel/cli.hpp"

int main(int argc, char** argv) {
    return noderel::run_cli(argc, argv, std::cout, std::cerr);
}
