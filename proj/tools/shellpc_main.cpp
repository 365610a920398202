#include <iostream>

#include "shellpc/cli.hpp"

int main(int argc, char** argv)
{
    return shellpc::cli::run_main(argc, argv, std::cout, std::cerr);
}
