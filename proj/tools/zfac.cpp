#include <iostream>

#include <zfac/cli.hpp>

int main(int argc, char **argv)
{
    return zfac::cli::main(argc, argv, std::cout, std::cerr);
}
