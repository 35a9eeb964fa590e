#include <iostream>
#include <string>
#include <vector>

#include "hilbert/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hilbert::cli::runCommand(args, std::cout, std::cerr);
}
