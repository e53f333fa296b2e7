#include <iostream>

#include "qbraid/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qbraid::cli::run(args, std::cout, std::cerr);
}
