/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/generators.hh>
#include <strongco/errors.hh>

#include <array>
#include <charconv>
#include <random>
#include <utility>

using std::string;
using std::string_view;
using std::vector;

namespace strongco
{
    namespace
    {
        struct FamilyInfo
        {
            Family family;
            string_view name;
            std::size_t arity;
        };

        constexpr std::array<FamilyInfo, 7> families{ {
            { Family::path, "path", 1 },
            { Family::cycle, "cycle", 1 },
            { Family::complete, "complete", 1 },
            { Family::complete_bipartite, "complete_bipartite", 2 },
            { Family::star, "star", 1 },
            { Family::friendship, "friendship", 1 },
            { Family::family_g, "family_g", 3 }
        } };

        auto info(Family f) -> const FamilyInfo &
        {
            for (auto & i : families)
                if (i.family == f)
                    return i;
            throw PreconditionError("unknown family");
        }

        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                throw PreconditionError(message);
        }

        // Uniform double in [0, 1) from the top 53 bits, so results do not depend on the
        // standard library's distribution implementations.
        auto unit(std::mt19937_64 & rng) -> double
        {
            return static_cast<double>(rng() >> 11) * 0x1.0p-53;
        }

        auto below(std::mt19937_64 & rng, std::uint64_t bound) -> std::uint64_t
        {
            // rejection sampling for an unbiased draw
            auto limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
            std::uint64_t x;
            do
                x = rng();
            while (x >= limit);
            return x % bound;
        }
    }

    auto family_name(Family f) -> string_view
    {
        return info(f).name;
    }

    auto parse_family_spec(string_view text) -> FamilySpec
    {
        auto colon = text.find(':');
        if (colon == string_view::npos)
            throw PreconditionError("generator spec '" + string(text) + "' must look like family:params");

        auto name = text.substr(0, colon);
        const FamilyInfo * found = nullptr;
        for (auto & i : families)
            if (i.name == name)
                found = &i;
        if (! found)
            throw PreconditionError("unknown graph family '" + string(name) + "'");

        FamilySpec result{ found->family, { } };
        auto rest = text.substr(colon + 1);
        while (true) {
            auto comma = rest.find(',');
            auto token = rest.substr(0, comma);
            int value = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{ } || ptr != token.data() + token.size() || token.empty())
                throw PreconditionError("bad parameter '" + string(token) + "' in generator spec '" + string(text) + "'");
            result.params.push_back(value);
            if (comma == string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }

        if (result.params.size() != found->arity)
            throw PreconditionError("family '" + string(name) + "' takes " + std::to_string(found->arity) + " parameter(s)");
        return result;
    }

    auto to_string(const FamilySpec & spec) -> string
    {
        string result(family_name(spec.family));
        result += ':';
        for (std::size_t i = 0 ; i < spec.params.size() ; ++i) {
            if (i)
                result += ',';
            result += std::to_string(spec.params[i]);
        }
        return result;
    }

    auto path_graph(int n) -> Graph
    {
        require(n >= 1, "path needs n >= 1");
        vector<Edge> edges;
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        vector<Edge> edges;
        for (Vertex v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph(n, edges);
    }

    auto complete_graph(int n) -> Graph
    {
        require(n >= 1, "complete graph needs n >= 1");
        vector<Edge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto complete_bipartite_graph(int r, int s) -> Graph
    {
        require(r >= 0 && s >= 0 && r + s >= 1, "complete bipartite needs r, s >= 0 and r + s >= 1");
        vector<Edge> edges;
        for (Vertex u = 0 ; u < r ; ++u)
            for (Vertex v = 0 ; v < s ; ++v)
                edges.emplace_back(u, r + v);
        return Graph(r + s, edges);
    }

    auto star_graph(int n) -> Graph
    {
        require(n >= 1, "star needs n >= 1");
        vector<Edge> edges;
        for (Vertex v = 1 ; v <= n ; ++v)
            edges.emplace_back(0, v);
        return Graph(n + 1, edges);
    }

    auto friendship_graph(int k) -> Graph
    {
        require(k >= 1, "friendship graph needs k >= 1");
        vector<Edge> edges;
        for (int t = 0 ; t < k ; ++t) {
            Vertex a = 1 + 2 * t, b = 2 + 2 * t;
            edges.emplace_back(0, a);
            edges.emplace_back(0, b);
            edges.emplace_back(a, b);
        }
        return Graph(2 * k + 1, edges);
    }

    auto family_g_graph(const FamilyGParams & params) -> Graph
    {
        auto [r, s, p] = params;
        require(r >= 0 && s >= 0 && p >= 0, "family_g parameters must be nonnegative");
        require(params.order() >= 1, "family_g needs r + s + 2p >= 1");

        auto u = [&] (int j) { return j; };
        auto v = [&] (int j) { return r + j; };
        auto x = [&] (int i) { return r + s + i; };
        auto w = [&] (int i) { return r + s + p + i; };

        vector<string> labels;
        for (int j = 0 ; j < r ; ++j)
            labels.push_back("u" + std::to_string(j + 1));
        for (int j = 0 ; j < s ; ++j)
            labels.push_back("v" + std::to_string(j + 1));
        for (int i = 0 ; i < p ; ++i)
            labels.push_back("x" + std::to_string(i + 1));
        for (int i = 0 ; i < p ; ++i)
            labels.push_back("w" + std::to_string(i + 1));

        vector<Edge> edges;
        // K_{r+s} on A ∪ B
        for (Vertex a = 0 ; a < r + s ; ++a)
            for (Vertex b = a + 1 ; b < r + s ; ++b)
                edges.emplace_back(a, b);
        // 2K_p
        for (int i = 0 ; i < p ; ++i)
            for (int j = i + 1 ; j < p ; ++j) {
                edges.emplace_back(x(i), x(j));
                edges.emplace_back(w(i), w(j));
            }
        for (int i = 0 ; i < p ; ++i) {
            for (int j = 0 ; j < r ; ++j)
                edges.emplace_back(x(i), u(j));
            for (int j = 0 ; j < s ; ++j)
                edges.emplace_back(w(i), v(j));
        }

        return Graph(params.order(), edges, std::move(labels));
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        require(spec.params.size() == info(spec.family).arity, "wrong number of parameters for " + string(family_name(spec.family)));
        auto & a = spec.params;
        switch (spec.family) {
            case Family::path:               return path_graph(a[0]);
            case Family::cycle:              return cycle_graph(a[0]);
            case Family::complete:           return complete_graph(a[0]);
            case Family::complete_bipartite: return complete_bipartite_graph(a[0], a[1]);
            case Family::star:               return star_graph(a[0]);
            case Family::friendship:         return friendship_graph(a[0]);
            case Family::family_g:           return family_g_graph({ a[0], a[1], a[2] });
        }
        throw PreconditionError("unknown family");
    }

    auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        require(n >= 1, "random graph needs n >= 1");
        require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
        std::mt19937_64 rng(seed);
        vector<Edge> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (unit(rng) < p)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto random_regular_graph(int n, int d, std::uint64_t seed) -> Graph
    {
        require(n >= 1 && d >= 0 && d < n && (n * d) % 2 == 0, "no d-regular graph on n vertices for these parameters");
        std::mt19937_64 rng(seed);

        vector<Vertex> points;
        for (Vertex v = 0 ; v < n ; ++v)
            for (int k = 0 ; k < d ; ++k)
                points.push_back(v);

        for (int attempt = 0 ; attempt < 100000 ; ++attempt) {
            for (std::size_t i = points.size() ; i > 1 ; --i)
                std::swap(points[i - 1], points[below(rng, i)]);

            vector<VertexSet> seen(n, VertexSet(n));
            vector<Edge> edges;
            bool ok = true;
            for (std::size_t i = 0 ; i < points.size() && ok ; i += 2) {
                auto a = points[i], b = points[i + 1];
                if (a == b || seen[a].test(b))
                    ok = false;
                else {
                    seen[a].set(b);
                    seen[b].set(a);
                    edges.emplace_back(a, b);
                }
            }
            if (ok)
                return Graph(n, edges);
        }
        throw PreconditionError("failed to sample a regular graph");
    }

    auto sample_random_graphs(int count, int n, double p, std::uint64_t seed, const SampleFilter & filter) -> vector<Graph>
    {
        require(count >= 0, "sample count must be nonnegative");
        std::mt19937_64 seeds(seed);
        vector<Graph> result;
        long long attempts = 0;
        while (static_cast<int>(result.size()) < count) {
            if (++attempts > 1000000)
                throw PreconditionError("could not sample enough graphs passing the filter");
            auto g = random_graph(n, p, seeds());
            if (filter.connected && ! g.is_connected())
                continue;
            if (filter.no_universal_vertex && ! degree_stats(g).universal_vertices.empty())
                continue;
            result.push_back(std::move(g));
        }
        return result;
    }
}
