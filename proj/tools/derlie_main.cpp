#include <iostream>
#include <string>
#include <vector>

#include "derlie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return derlie::run_command(args, std::cin, std::cout, std::cerr);
}
