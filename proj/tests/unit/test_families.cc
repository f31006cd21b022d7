/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/coalition.hh>
#include <strongco/errors.hh>
#include <strongco/families.hh>
#include <strongco/generators.hh>

#include <doctest.h>

using namespace strongco;

namespace
{
    auto sc(Family f, std::vector<int> params) -> OracleAnswer
    {
        return sc_oracle(FamilySpec{ f, std::move(params) });
    }

    auto c(Family f, std::vector<int> params) -> OracleAnswer
    {
        return c_oracle(FamilySpec{ f, std::move(params) });
    }
}

TEST_CASE("strong oracle examples")
{
    CHECK(sc(Family::path, { 11 }).value == 5);
    CHECK(sc(Family::path, { 3 }).value == 0);
    CHECK(sc(Family::path, { 1 }).value == 1);
    CHECK(sc(Family::path, { 2 }).value == 2);
    CHECK(sc(Family::path, { 12 }).value == 6);
    CHECK(sc(Family::path, { 40 }).value == 6);
    CHECK(sc(Family::cycle, { 5 }).value == 5);
    CHECK(sc(Family::cycle, { 7 }).value == 5);
    CHECK(sc(Family::cycle, { 30 }).value == 6);
    CHECK(sc(Family::complete, { 6 }).value == 6);
    CHECK(sc(Family::complete_bipartite, { 4, 4 }).value == 8);
    CHECK(sc(Family::complete_bipartite, { 5, 2 }).value == 2);
    CHECK(sc(Family::complete_bipartite, { 2, 5 }).value == 2);
    CHECK(sc(Family::complete_bipartite, { 1, 1 }).value == 2);
    CHECK(sc(Family::complete_bipartite, { 1, 4 }).value == 0);
    CHECK(sc(Family::star, { 1 }).value == 2);
    CHECK(sc(Family::star, { 4 }).value == 0);
    CHECK(sc(Family::friendship, { 1 }).value == 3);
    CHECK(sc(Family::friendship, { 3 }).value == 0);

    for (auto & a : { sc(Family::path, { 11 }), sc(Family::star, { 4 }), sc(Family::complete_bipartite, { 3, 3 }) }) {
        CHECK(a.applicable);
        CHECK(! a.source.empty());
    }

    CHECK(! sc(Family::family_g, { 1, 1, 1 }).applicable);
    CHECK(! sc(Family::complete_bipartite, { 3, 0 }).applicable);
}

TEST_CASE("plain oracle examples")
{
    CHECK(c(Family::cycle, { 8 }).value == 6);
    CHECK(c(Family::cycle, { 4 }).value == 4);
    CHECK(c(Family::cycle, { 7 }).value == 5);
    CHECK(c(Family::complete_bipartite, { 5, 2 }).value == 7);
    CHECK(c(Family::complete_bipartite, { 2, 5 }).value == 7);
    CHECK(c(Family::complete_bipartite, { 5, 2 }).applicable);
    CHECK(! c(Family::complete_bipartite, { 3, 3 }).applicable);
    CHECK(! c(Family::complete_bipartite, { 4, 1 }).applicable);
    CHECK(! c(Family::path, { 6 }).applicable);
    CHECK(! c(Family::complete, { 6 }).applicable);
}

TEST_CASE("family F membership")
{
    CHECK(family_f_member(star_graph(4)));
    CHECK(family_f_member(friendship_graph(2)));
    CHECK(family_f_member(path_graph(3)));
    CHECK(! family_f_member(complete_graph(4)));
    CHECK(! family_f_member(complete_graph(1)));
    CHECK(! family_f_member(path_graph(4)));
    CHECK(! family_f_member(cycle_graph(5)));
    CHECK(! family_f_member(complete_bipartite_graph(2, 2)));
}

TEST_CASE("family G check examples")
{
    for (auto params : { FamilyGParams{ 1, 1, 1 }, FamilyGParams{ 0, 0, 2 }, FamilyGParams{ 2, 2, 0 }, FamilyGParams{ 0, 0, 3 }, FamilyGParams{ 1, 2, 2 } }) {
        CAPTURE(params.r);
        CAPTURE(params.s);
        CAPTURE(params.p);
        auto check = family_g_check(params);
        CHECK(check.graph.order() == params.order());
        CHECK(check.singletons_valid);
        CHECK(check.solved_value == params.order());
        CHECK(check.sc_equals_order);
    }

    CHECK_THROWS_AS(family_g_check(FamilyGParams{ 1, 0, 1 }), PreconditionError);
    CHECK_THROWS_AS(family_g_check(FamilyGParams{ 5, 5, 6 }), CapacityError);
}

TEST_CASE("oracles agree with the solver")
{
    for (int n = 1 ; n <= 13 ; ++n)
        CHECK(solve(path_graph(n), DominationStyle::strong).value == sc(Family::path, { n }).value);

    for (int n = 3 ; n <= 12 ; ++n) {
        CHECK(solve(cycle_graph(n), DominationStyle::strong).value == sc(Family::cycle, { n }).value);
        CHECK(solve(cycle_graph(n), DominationStyle::plain).value == c(Family::cycle, { n }).value);
    }

    for (int r = 1 ; r <= 5 ; ++r)
        for (int s = 1 ; s <= 5 ; ++s) {
            auto g = complete_bipartite_graph(r, s);
            CHECK(solve(g, DominationStyle::strong).value == sc(Family::complete_bipartite, { r, s }).value);
            auto plain = c(Family::complete_bipartite, { r, s });
            if (plain.applicable)
                CHECK(solve(g, DominationStyle::plain).value == plain.value);
        }

    for (int n = 1 ; n <= 7 ; ++n) {
        CHECK(solve(complete_graph(n), DominationStyle::strong).value == n);
        CHECK(solve(star_graph(n), DominationStyle::strong).value == sc(Family::star, { n }).value);
    }

    for (int k = 1 ; k <= 4 ; ++k)
        CHECK(solve(friendship_graph(k), DominationStyle::strong).value == sc(Family::friendship, { k }).value);
}

TEST_CASE("strong and plain coalition numbers can be far apart")
{
    // K_{r,s} with r > s > 1 and r + s - 2 = m has C - SC = m
    std::vector<std::pair<int, int>> parts{ { 3, 2 }, { 4, 2 }, { 4, 3 }, { 5, 3 } };
    for (int m = 3 ; m <= 6 ; ++m) {
        auto [r, s] = parts[m - 3];
        auto g = complete_bipartite_graph(r, s);
        auto strong = solve(g, DominationStyle::strong).value;
        auto plain = solve(g, DominationStyle::plain).value;
        CHECK(strong == 2);
        CHECK(plain == r + s);
        CHECK(plain - strong == m);
    }
}
