/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "graph_enumeration.hh"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

using strongco::Edge;
using strongco::Graph;

namespace enumeration
{
    namespace
    {
        auto code_for(const Graph & g, const std::vector<int> & order) -> std::uint64_t
        {
            std::uint64_t code = 0;
            int n = g.order();
            for (int i = 0 ; i < n ; ++i)
                for (int j = i + 1 ; j < n ; ++j)
                    code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0);
            return code;
        }

        // permutes within each run of equal degree, trying every combination
        auto search(const Graph & g, std::vector<int> & order, const std::vector<std::pair<int, int>> & runs,
                std::size_t run, std::uint64_t & best) -> void
        {
            if (run == runs.size()) {
                best = std::max(best, code_for(g, order));
                return;
            }
            auto [start, end] = runs[run];
            std::sort(order.begin() + start, order.begin() + end);
            do
                search(g, order, runs, run + 1, best);
            while (std::next_permutation(order.begin() + start, order.begin() + end));
        }
    }

    auto canonical_code(const Graph & g) -> std::uint64_t
    {
        int n = g.order();
        if (n > 11)
            throw std::invalid_argument("canonical_code is for tiny graphs");
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) < g.degree(b); });

        std::vector<std::pair<int, int>> runs;
        for (int i = 0 ; i < n ; ) {
            int j = i;
            while (j < n && g.degree(order[j]) == g.degree(order[i]))
                ++j;
            runs.emplace_back(i, j);
            i = j;
        }

        std::uint64_t best = 0;
        search(g, order, runs, 0, best);
        return best;
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order())
            return false;
        auto da = a.degrees(), db = b.degrees();
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        if (da != db)
            return false;
        std::vector<int> perm(a.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool same = true;
            for (int u = 0 ; u < a.order() && same ; ++u)
                for (int v = u + 1 ; v < a.order() && same ; ++v)
                    if (a.adjacent(u, v) != b.adjacent(perm[u], perm[v]))
                        same = false;
            if (same)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    auto all_graphs(int n) -> std::vector<Graph>
    {
        if (n < 1 || n > 8)
            throw std::invalid_argument("all_graphs supports 1 <= n <= 8");
        if (n == 1)
            return { Graph(1, { }) };

        // every graph on n vertices is some graph on n - 1 vertices plus a vertex
        std::vector<Graph> result;
        std::set<std::uint64_t> seen;
        for (auto & smaller : all_graphs(n - 1)) {
            auto base = smaller.edges();
            for (unsigned mask = 0 ; mask < (1u << (n - 1)) ; ++mask) {
                auto edges = base;
                for (int v = 0 ; v < n - 1 ; ++v)
                    if ((mask >> v) & 1)
                        edges.emplace_back(v, n - 1);
                Graph g(n, edges);
                if (seen.insert(canonical_code(g)).second)
                    result.push_back(std::move(g));
            }
        }
        return result;
    }

    auto connected_graphs(int n) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        for (auto & g : all_graphs(n))
            if (g.is_connected())
                result.push_back(g);
        return result;
    }
}
