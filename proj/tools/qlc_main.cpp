#include <iostream>
#include <string>
#include <vector>

#include "qlc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qlc::cli::run(args, std::cout, std::cerr);
}
