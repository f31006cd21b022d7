/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return strongco::run_cli(args, std::cout, std::cerr);
}
