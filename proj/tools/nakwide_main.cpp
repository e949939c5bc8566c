#include <iostream>

#include "nakwide/cli.hpp"

int main(int argc, char** argv)
{
    return nakwide::cli::run(argc, argv, std::cout, std::cerr);
}
