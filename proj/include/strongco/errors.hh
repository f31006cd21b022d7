/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_ERRORS_HH
#define STRONGCO_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace strongco
{
    /// Malformed edge-list or partition text. Carries the 1-based line number.
    class ParseError : public std::runtime_error
    {
        private:
            int _line;

        public:
            ParseError(int line, const std::string & message);

            auto line() const noexcept -> int
            {
                return _line;
            }
    };

    /// The requested instance is larger than the configured exact-solving limit.
    class CapacityError : public std::runtime_error
    {
        private:
            int _order, _limit;

        public:
            CapacityError(int order, int limit);

            auto order() const noexcept -> int
            {
                return _order;
            }

            auto limit() const noexcept -> int
            {
                return _limit;
            }
    };

    /// Something that should be a partition of V(G) is not one.
    class StructuralError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A generator, oracle or algorithm was called outside its precondition.
    class PreconditionError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };
}

#endif
