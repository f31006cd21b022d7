/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/errors.hh>

namespace strongco
{
    ParseError::ParseError(int line, const std::string & message) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        _line(line)
    {
    }

    CapacityError::CapacityError(int order, int limit) :
        std::runtime_error("graph of order " + std::to_string(order)
                + " exceeds the exact-solving limit of " + std::to_string(limit) + " vertices"),
        _order(order),
        _limit(limit)
    {
    }
}
