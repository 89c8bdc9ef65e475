#include <iostream>

#include "phasetrop/cli.hpp"

int main(int argc, char** argv)
{
    return phasetrop::run_cli(argc, argv, std::cout, std::cerr);
}
