#include <iostream>

#include "ipmkit/cli.hpp"

int main(int argc, char** argv) {
    return ipmkit::cli::run(argc, argv, std::cout, std::cerr);
}
