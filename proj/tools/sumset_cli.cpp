#include <iostream>
#include <string>
#include <vector>

#include "sumset/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sumset::cli::run(std::move(args), std::cout, std::cerr);
}
