#include <iostream>
#include <string>
#include <vector>

#include "fibindex/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fibindex::run_cli(args, std::cout, std::cerr);
}
