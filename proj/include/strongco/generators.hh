/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_GENERATORS_HH
#define STRONGCO_GUARD_GENERATORS_HH 1

#include <strongco/graph.hh>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace strongco
{
    enum class Family
    {
        path,
        cycle,
        complete,
        complete_bipartite,
        star,
        friendship,
        family_g
    };

    /// A family name plus its integer parameters, written "path:9" or "complete_bipartite:4,3".
    struct FamilySpec
    {
        Family family;
        std::vector<int> params;

        auto operator== (const FamilySpec &) const -> bool = default;
    };

    /// Parameters of the two-clique family: a clique on A ∪ B (|A| = r, |B| = s) plus
    /// two copies of K_p, the first joined to all of A and the second to all of B.
    struct FamilyGParams
    {
        int r = 0;
        int s = 0;
        int p = 0;

        auto order() const -> int
        {
            return r + s + 2 * p;
        }
    };

    auto family_name(Family f) -> std::string_view;

    /// Throws PreconditionError for unknown names or the wrong number of parameters.
    auto parse_family_spec(std::string_view text) -> FamilySpec;
    auto to_string(const FamilySpec & spec) -> std::string;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto complete_bipartite_graph(int r, int s) -> Graph;

    /// K_{1,n}: vertex v1 is the centre.
    auto star_graph(int n) -> Graph;

    /// k triangles sharing vertex v1; order 2k + 1.
    auto friendship_graph(int k) -> Graph;

    /// Vertices in the order u1..ur, v1..vs, x1..xp, w1..wp, labelled that way.
    auto family_g_graph(const FamilyGParams & params) -> Graph;

    /// Throws PreconditionError for invalid parameters.
    auto generate(const FamilySpec & spec) -> Graph;

    /// G(n, p) with every edge drawn from a seeded mt19937_64 stream.
    auto random_graph(int n, double p, std::uint64_t seed) -> Graph;

    /// Uniform-ish d-regular graph via the pairing model with rejection. Requires n * d even and d < n.
    auto random_regular_graph(int n, int d, std::uint64_t seed) -> Graph;

    struct SampleFilter
    {
        bool connected = true;
        bool no_universal_vertex = true;
    };

    /// Draws G(n, p) graphs from one seeded stream, keeping the first `count` that pass the filter.
    auto sample_random_graphs(int count, int n, double p, std::uint64_t seed, const SampleFilter & filter) -> std::vector<Graph>;
}

#endif
