#include <iostream>
#include <string>
#include <vector>

#include "apsp/harness.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return apsp::run_cli(args, std::cout, std::cerr);
}
