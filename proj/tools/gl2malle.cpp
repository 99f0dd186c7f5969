#include <iostream>
#include <vector>

#include "gl2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gl2::run_cli(args, std::cout, std::cerr);
}
