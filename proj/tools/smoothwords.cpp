#include <iostream>
#include <string>
#include <vector>

#include "smoothwords/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return smoothwords::run_cli(args, std::cout, std::cerr);
}
