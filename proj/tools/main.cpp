#include "hilbert_alloc/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hilbert_alloc::run_cli(args, std::cout, std::cerr);
}
