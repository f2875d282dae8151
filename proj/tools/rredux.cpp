#include <iostream>
#include <string>
#include <vector>

#include "rredux/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return rredux::run_cli(std::move(args), std::cout, std::cerr);
}
