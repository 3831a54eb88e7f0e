#include <iostream>
#include <string>
#include <vector>

#include "hom3lie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return hom3lie::run_command(args, std::cout);
}
