#include "commands.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto o = twd::cli::run(args);
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}
