#include <iostream>
#include <string>
#include <vector>

#include "circlecheb/cli/run.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return circlecheb::cli::run(args, std::cout, std::cerr);
}
