#include <iostream>
#include <string>
#include <vector>

#include "fhopf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fhopf::cli::run(args, std::cout, std::cerr);
}
