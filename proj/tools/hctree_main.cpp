#include <iostream>
#include <string>
#include <vector>

#include "hc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hc::run_cli(args, std::cout, std::cerr);
}
