/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_FAMILIES_HH
#define STRONGCO_GUARD_FAMILIES_HH 1

#include <strongco/domination.hh>
#include <strongco/generators.hh>
#include <strongco/graph.hh>

#include <string>

namespace strongco
{
    /// Closed-form coalition number for a family instance. Read value only when applicable.
    struct OracleAnswer
    {
        bool applicable = false;
        int value = 0;
        std::string source;  ///< which result fixes the value, or why none does
    };

    /// Strong coalition number of paths, cycles, complete, complete bipartite, star and friendship graphs.
    auto sc_oracle(const FamilySpec & spec) -> OracleAnswer;

    /// Plain coalition number of cycles and of K_{r,s} with r > s > 1.
    auto c_oracle(const FamilySpec & spec) -> OracleAnswer;

    /// Non-complete with at least one vertex of degree n - 1.
    auto family_f_member(const Graph & g) -> bool;

    struct FamilyGCheck
    {
        Graph graph;
        bool singletons_valid = false;
        int solved_value = 0;
        bool sc_equals_order = false;
    };

    /**
     * Builds the two-clique family graph, checks that the all-singletons
     * partition is a strong coalition partition and that the solver returns
     * the order. Requires order >= 4; throws CapacityError above exact_limit.
     */
    auto family_g_check(const FamilyGParams & params, int exact_limit = default_exact_limit) -> FamilyGCheck;
}

#endif
