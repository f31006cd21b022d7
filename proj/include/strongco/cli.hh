/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_CLI_HH
#define STRONGCO_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace strongco
{
    namespace exit_codes
    {
        inline constexpr int success = 0;
        inline constexpr int failure = 1;   ///< bad input, invalid partition, failed check
        inline constexpr int capacity = 2;  ///< order above the exact-solving limit
    }

    /// Runs the command line `args` (without the program name), writing to out and err.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
