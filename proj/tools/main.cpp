#include <iostream>

#include "fthresh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fthresh::run_cli(args, std::cin, std::cout, std::cerr);
}
