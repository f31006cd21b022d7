/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/errors.hh>
#include <strongco/generators.hh>
#include <strongco/graph.hh>

#include "../support/graph_enumeration.hh"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace strongco;

namespace
{
    auto sorted_degrees(const Graph & g) -> std::vector<int>
    {
        auto d = g.degrees();
        std::sort(d.begin(), d.end());
        return d;
    }

    auto parse_error_line(std::string_view text) -> int
    {
        try {
            parse_edge_list(text);
        }
        catch (const ParseError & e) {
            return e.line();
        }
        return 0;
    }
}

TEST_CASE("vertex set basics")
{
    VertexSet s(10, { 1, 3, 9 });
    CHECK(s.count() == 3);
    CHECK(s.test(3));
    CHECK(! s.test(4));
    CHECK(! s.test(10));
    CHECK(s.first() == 1);
    CHECK(s.members() == std::vector<Vertex>{ 1, 3, 9 });
    CHECK(s.to_mask() == 0b1000001010);
    CHECK(s.complement().count() == 7);
    CHECK(VertexSet::from_mask(10, 0b1000001010) == s);
    CHECK(VertexSet(10).first() == -1);

    CHECK_THROWS_AS(s.set(10), PreconditionError);
    CHECK_THROWS_AS(VertexSet::from_mask(3, 0b1000), PreconditionError);
    CHECK_THROWS_AS(s |= VertexSet(11), PreconditionError);
}

TEST_CASE("vertex sets span several words")
{
    VertexSet a(130, { 0, 64, 129 }), b(130, { 64, 100 });
    CHECK((a | b).count() == 4);
    CHECK((a & b).members() == std::vector<Vertex>{ 64 });
    CHECK((a - b).members() == std::vector<Vertex>{ 0, 129 });
    CHECK(VertexSet(130, { 64 }).is_subset_of(a));
    CHECK(a.first() == 0);
    CHECK(VertexSet::full(130).count() == 130);
    CHECK_THROWS_AS(a.to_mask(), PreconditionError);
    CHECK(VertexSet(130, { 129 }) > VertexSet(130, { 128, 127 }));
}

TEST_CASE("inclusion-exclusion holds for random sets")
{
    std::mt19937_64 rng(1234);
    for (int trial = 0 ; trial < 500 ; ++trial) {
        int universe = 1 + static_cast<int>(rng() % 200);
        VertexSet a(universe), b(universe);
        for (Vertex v = 0 ; v < universe ; ++v) {
            if (rng() & 1) a.set(v);
            if (rng() & 1) b.set(v);
        }
        CHECK((a | b).count() + (a & b).count() == a.count() + b.count());
        CHECK((a - b).count() == a.count() - (a & b).count());
        CHECK(((a | b).complement() == (a.complement() & b.complement())));
    }
}

TEST_CASE("graph invariants")
{
    CHECK_THROWS_AS(Graph(3, { { 1, 1 } }), PreconditionError);
    CHECK_THROWS_AS(Graph(3, { { 0, 3 } }), PreconditionError);

    Graph g(4, { { 0, 1 }, { 1, 0 }, { 1, 2 } });
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.degrees() == std::vector<int>{ 1, 2, 1, 0 });
    CHECK(g.label(3) == "v4");
    CHECK(! g.is_connected());

    for (auto & h : enumeration::all_graphs(5))
        for (Vertex u = 0 ; u < 5 ; ++u) {
            CHECK(! h.adjacent(u, u));
            CHECK(h.degree(u) == h.neighbourhood(u).count());
            CHECK(h.degree(u) <= 4);
            for (Vertex v = 0 ; v < 5 ; ++v)
                CHECK(h.adjacent(u, v) == h.adjacent(v, u));
        }
}

TEST_CASE("parse_edge_list examples")
{
    auto p4 = parse_edge_list("4 3\n1 2\n2 3\n3 4");
    CHECK(p4.degrees() == std::vector<int>{ 1, 2, 2, 1 });
    CHECK(p4.same_structure(path_graph(4)));

    auto k1 = parse_edge_list("1 0");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    auto k3 = parse_edge_list("3 3\n1 2\n2 3\n1 3");
    CHECK(k3.degrees() == std::vector<int>{ 2, 2, 2 });
    CHECK(k3.is_complete());
}

TEST_CASE("parse_edge_list skips comments and collapses duplicates")
{
    auto g = parse_edge_list("# a triangle, twice\n\n3 4\n1 2\n# middle\n2 3\n3 1\n2 1\n");
    CHECK(g.edge_count() == 3);
    CHECK(g.is_complete());
}

TEST_CASE("parse_edge_list errors name the line")
{
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("3\n1 2") == 1);
    CHECK(parse_error_line("x 1\n1 2") == 1);
    CHECK(parse_error_line("3 2\n1 2\n2 4") == 3);
    CHECK(parse_error_line("# header next\n3 2\n1 2\n2 2") == 4);
    CHECK(parse_error_line("3 2\n1 2") == 3);
    CHECK(parse_error_line("3 1\n1 2\n2 3") == 3);
    CHECK(parse_error_line("3 1\n1 2 3") == 2);
    CHECK(parse_error_line("3 1\n0 2") == 2);
}

TEST_CASE("writing then parsing reproduces generated graphs")
{
    std::vector<Graph> graphs;
    for (int n = 1 ; n <= 9 ; ++n) {
        graphs.push_back(path_graph(n));
        graphs.push_back(complete_graph(n));
        graphs.push_back(star_graph(n));
        graphs.push_back(random_graph(n, 0.4, 100 + n));
        if (n >= 3)
            graphs.push_back(cycle_graph(n));
    }
    for (int r = 0 ; r <= 3 ; ++r)
        for (int s = 0 ; s <= 3 ; ++s)
            for (int p = 0 ; p <= 2 ; ++p)
                if (r + s + 2 * p >= 1)
                    graphs.push_back(family_g_graph({ r, s, p }));

    for (auto & g : graphs) {
        auto text = to_edge_list(g);
        auto back = parse_edge_list(text);
        CHECK(back.same_structure(g));
        CHECK(to_edge_list(back) == text);
    }
}

TEST_CASE("degree_stats examples")
{
    auto star = degree_stats(star_graph(4));
    CHECK(star.min_degree == 1);
    CHECK(star.max_degree == 4);
    CHECK(star.universal_vertices == VertexSet(5, { 0 }));

    auto c5 = degree_stats(cycle_graph(5));
    CHECK(c5.min_degree == 2);
    CHECK(c5.max_degree == 2);
    CHECK(c5.universal_vertices.empty());

    auto k3 = degree_stats(complete_graph(3));
    CHECK(k3.min_degree == 2);
    CHECK(k3.max_degree == 2);
    CHECK(k3.universal_vertices.count() == 3);
}

TEST_CASE("path and cycle generators")
{
    for (int n = 2 ; n <= 15 ; ++n) {
        auto d = path_graph(n).degrees();
        CHECK(std::count(d.begin(), d.end(), 1) == 2);
        CHECK(path_graph(n).is_connected());
    }
    for (int n = 3 ; n <= 15 ; ++n) {
        auto c = cycle_graph(n);
        CHECK(c.is_regular());
        CHECK(c.min_degree() == 2);
    }
    CHECK_THROWS_AS(cycle_graph(2), PreconditionError);
    CHECK_THROWS_AS(path_graph(0), PreconditionError);
}

TEST_CASE("star and friendship generators")
{
    auto s = star_graph(4);
    CHECK(s.order() == 5);
    CHECK(s.degree(0) == 4);

    auto f = friendship_graph(3);
    CHECK(f.order() == 7);
    CHECK(f.edge_count() == 9);
    CHECK(f.degree(0) == 6);
    for (Vertex v = 1 ; v < 7 ; ++v)
        CHECK(f.degree(v) == 2);
    CHECK_THROWS_AS(friendship_graph(0), PreconditionError);
}

TEST_CASE("family_g examples")
{
    // r = s = 0: two disjoint triangles
    auto two_triangles = family_g_graph({ 0, 0, 3 });
    CHECK(two_triangles.order() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK(! two_triangles.is_connected());
    CHECK(two_triangles.is_regular());

    // p = 0: K_{r+s}
    CHECK(family_g_graph({ 2, 1, 0 }).same_structure(complete_graph(3)));

    // r = s = p = 1: x1 - u1 - v1 - w1
    auto g = family_g_graph({ 1, 1, 1 });
    CHECK(g.labels() == std::vector<std::string>{ "u1", "v1", "x1", "w1" });
    CHECK(enumeration::isomorphic(g, path_graph(4)));
    CHECK(sorted_degrees(g) == std::vector<int>{ 1, 1, 2, 2 });

    CHECK_THROWS_AS(family_g_graph({ 0, 0, 0 }), PreconditionError);
    CHECK_THROWS_AS(family_g_graph({ -1, 2, 2 }), PreconditionError);
}

TEST_CASE("family_g degrees follow the edge rule")
{
    for (int r = 0 ; r <= 3 ; ++r)
        for (int s = 0 ; s <= 3 ; ++s)
            for (int p = 0 ; p <= 3 ; ++p) {
                if (r + s + 2 * p < 1)
                    continue;
                auto g = family_g_graph({ r, s, p });
                CHECK(g.order() == r + s + 2 * p);
                for (int j = 0 ; j < r ; ++j)
                    CHECK(g.degree(j) == r + s - 1 + p);
                for (int j = 0 ; j < s ; ++j)
                    CHECK(g.degree(r + j) == r + s - 1 + p);
                for (int i = 0 ; i < p ; ++i) {
                    CHECK(g.degree(r + s + i) == p - 1 + r);
                    CHECK(g.degree(r + s + p + i) == p - 1 + s);
                }
            }
}

TEST_CASE("family specs")
{
    auto spec = parse_family_spec("complete_bipartite:4,3");
    CHECK(spec.family == Family::complete_bipartite);
    CHECK(spec.params == std::vector<int>{ 4, 3 });
    CHECK(to_string(spec) == "complete_bipartite:4,3");
    CHECK(generate(parse_family_spec("family_g:1,1,2")).order() == 6);
    CHECK(generate(parse_family_spec("path:9")).order() == 9);

    CHECK_THROWS_AS(parse_family_spec("path"), PreconditionError);
    CHECK_THROWS_AS(parse_family_spec("path:"), PreconditionError);
    CHECK_THROWS_AS(parse_family_spec("path:3,4"), PreconditionError);
    CHECK_THROWS_AS(parse_family_spec("petersen:10"), PreconditionError);
    CHECK_THROWS_AS(parse_family_spec("path:x"), PreconditionError);
    CHECK_THROWS_AS(generate(parse_family_spec("cycle:2")), PreconditionError);
    CHECK_THROWS_AS(generate(parse_family_spec("path:-1")), PreconditionError);
}

TEST_CASE("seeded random graphs are reproducible")
{
    CHECK(random_graph(12, 0.5, 7).same_structure(random_graph(12, 0.5, 7)));
    CHECK(random_graph(1, 0.5, 7).order() == 1);
    CHECK(random_graph(10, 0.0, 3).edge_count() == 0);
    CHECK(random_graph(10, 1.0, 3).is_complete());

    for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
        auto g = random_regular_graph(10, 3, seed);
        CHECK(g.is_regular());
        CHECK(g.max_degree() == 3);
    }
    CHECK_THROWS_AS(random_regular_graph(5, 3, 1), PreconditionError);

    auto sample = sample_random_graphs(10, 8, 0.5, 99, SampleFilter{ });
    CHECK(sample.size() == 10);
    for (auto & g : sample) {
        CHECK(g.is_connected());
        CHECK(degree_stats(g).universal_vertices.empty());
    }
}

TEST_CASE("graph enumeration matches the known counts")
{
    // numbers of graphs and of connected graphs up to isomorphism
    std::vector<std::size_t> all{ 1, 2, 4, 11, 34, 156, 1044 }, connected{ 1, 1, 2, 6, 21, 112, 853 };
    for (int n = 1 ; n <= 7 ; ++n) {
        CHECK(enumeration::all_graphs(n).size() == all[n - 1]);
        CHECK(enumeration::connected_graphs(n).size() == connected[n - 1]);
    }
}
