#include <iostream>

#include "pword/cli.hpp"

int main(int argc, char **argv)
{
    std::ios::sync_with_stdio(false);
    return pword::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
