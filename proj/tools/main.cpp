#include <iostream>
#include <string>
#include <vector>

#include "c5census/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return c5census::dispatch(args, std::cout, std::cerr);
}
