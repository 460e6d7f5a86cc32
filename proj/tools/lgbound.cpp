#include <iostream>
#include <string>
#include <vector>

#include "lgbound/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lgbound::cli::run(args, std::cout, std::cerr);
}
