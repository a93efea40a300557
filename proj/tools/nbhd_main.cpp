#include <iostream>

#include "nbhd/cli.hpp"

int main(int argc, char** argv) {
    return nbhd::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
