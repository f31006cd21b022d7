/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/families.hh>
#include <strongco/coalition.hh>
#include <strongco/errors.hh>

#include <algorithm>
#include <utility>

namespace strongco
{
    namespace
    {
        auto answer(int value, std::string source) -> OracleAnswer
        {
            return OracleAnswer{ true, value, std::move(source) };
        }

        auto not_settled(std::string why) -> OracleAnswer
        {
            return OracleAnswer{ false, 0, std::move(why) };
        }

        auto path_value(int n) -> int
        {
            if (n == 1) return 1;
            if (n == 2) return 2;
            if (n == 3) return 0;
            if (n <= 7) return 4;
            if (n <= 11) return 5;
            return 6;
        }

        // same piecewise form for C and SC, the two agree on regular graphs
        auto cycle_value(int n) -> int
        {
            if (n <= 6) return n;
            if (n == 7) return 5;
            return 6;
        }

        auto complete_answer(int n) -> OracleAnswer
        {
            return answer(n, "complete graphs attain the order bound");
        }
    }

    auto sc_oracle(const FamilySpec & spec) -> OracleAnswer
    {
        auto & a = spec.params;
        switch (spec.family) {
            case Family::path:
                if (a.at(0) < 1)
                    return not_settled("path needs n >= 1");
                return answer(path_value(a[0]), "strong coalition number of paths");

            case Family::cycle:
                if (a.at(0) < 3)
                    return not_settled("cycle needs n >= 3");
                return answer(cycle_value(a[0]), "strong coalition number of cycles");

            case Family::complete:
                if (a.at(0) < 1)
                    return not_settled("complete graph needs n >= 1");
                return complete_answer(a[0]);

            case Family::complete_bipartite: {
                int r = std::max(a.at(0), a.at(1)), s = std::min(a.at(0), a.at(1));
                if (s < 1)
                    return not_settled("K_{r,0} is edgeless");
                if (r == 1)
                    return complete_answer(2);
                if (s == 1)
                    return answer(0, "stars have no strong coalition partition");
                if (r == s)
                    return answer(2 * r, "K_{r,r}: all singletons");
                return answer(2, "K_{r,s} with r > s > 1");
            }

            case Family::star:
                if (a.at(0) < 1)
                    return not_settled("star needs n >= 1");
                if (a[0] == 1)
                    return complete_answer(2);
                return answer(0, "stars have no strong coalition partition");

            case Family::friendship:
                if (a.at(0) < 1)
                    return not_settled("friendship graph needs k >= 1");
                if (a[0] == 1)
                    return complete_answer(3);
                return answer(0, "friendship graphs have no strong coalition partition");

            case Family::family_g:
                return not_settled("use family_g_check");
        }
        return not_settled("unknown family");
    }

    auto c_oracle(const FamilySpec & spec) -> OracleAnswer
    {
        auto & a = spec.params;
        switch (spec.family) {
            case Family::cycle:
                if (a.at(0) < 3)
                    return not_settled("cycle needs n >= 3");
                return answer(cycle_value(a[0]), "coalition number of cycles");

            case Family::complete_bipartite: {
                int r = std::max(a.at(0), a.at(1)), s = std::min(a.at(0), a.at(1));
                if (r > s && s > 1)
                    return answer(r + s, "C(K_{r,s}) = r + s for r > s > 1");
                return not_settled("only r > s > 1 is settled");
            }

            default:
                return not_settled("no closed form for the plain coalition number of this family");
        }
    }

    auto family_f_member(const Graph & g) -> bool
    {
        return (! g.is_complete()) && ! degree_stats(g).universal_vertices.empty();
    }

    auto family_g_check(const FamilyGParams & params, int exact_limit) -> FamilyGCheck
    {
        if (params.order() < 4)
            throw PreconditionError("family_g_check needs order at least 4");
        if (params.order() > exact_limit)
            throw CapacityError(params.order(), exact_limit);

        FamilyGCheck result;
        result.graph = family_g_graph(params);
        result.singletons_valid = validate_partition(result.graph, Partition::singletons(result.graph.order()), DominationStyle::strong).valid;
        result.solved_value = solve(result.graph, DominationStyle::strong, SolverOptions{ exact_limit, 1, true }).value;
        result.sc_equals_order = result.singletons_valid && result.solved_value == result.graph.order();
        return result;
    }
}
