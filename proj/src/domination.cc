/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/domination.hh>
#include <strongco/errors.hh>

#include <algorithm>
#include <bit>
#include <set>
#include <string>

using std::uint64_t;
using std::vector;

namespace strongco
{
    auto to_string(DominationStyle style) -> std::string_view
    {
        return style == DominationStyle::strong ? "strong" : "plain";
    }

    auto parse_domination_style(std::string_view text) -> DominationStyle
    {
        if (text == "strong")
            return DominationStyle::strong;
        if (text == "plain")
            return DominationStyle::plain;
        throw PreconditionError("unknown domination style '" + std::string(text) + "' (expected plain or strong)");
    }

    DominatorTable::DominatorTable(const Graph & g, DominationStyle style) :
        _order(g.order())
    {
        if (_order > max_order)
            throw CapacityError(_order, max_order);

        _full = _order == 64 ? ~uint64_t{0} : (uint64_t{1} << _order) - 1;
        _closed.resize(_order);
        for (Vertex x = 0 ; x < _order ; ++x) {
            uint64_t row = uint64_t{1} << x;
            for (auto y : g.neighbourhood(x).members())
                if (style == DominationStyle::plain || g.degree(y) >= g.degree(x))
                    row |= uint64_t{1} << y;
            _closed[x] = row;
        }
    }

    auto is_dominating(const Graph & g, const VertexSet & s, DominationStyle style) -> bool
    {
        for (Vertex x = 0 ; x < g.order() ; ++x) {
            if (s.test(x))
                continue;
            bool handled = false;
            for (auto y : (g.neighbourhood(x) & s).members())
                if (style == DominationStyle::plain || g.degree(y) >= g.degree(x)) {
                    handled = true;
                    break;
                }
            if (! handled)
                return false;
        }
        return true;
    }

    namespace
    {
        struct SmallestDominatingSets
        {
            const DominatorTable & table;
            int limit;
            bool collect_all;
            std::set<uint64_t> found;

            auto search(uint64_t chosen, int size) -> bool
            {
                auto x = table.first_undominated(chosen);
                if (-1 == x) {
                    found.insert(chosen);
                    return true;
                }
                if (size == limit)
                    return false;

                bool any = false;
                for (auto options = table.closed_dominators(x) ; options ; options &= options - 1) {
                    auto y = uint64_t{1} << std::countr_zero(options);
                    if (search(chosen | y, size + 1)) {
                        any = true;
                        if (! collect_all)
                            return true;
                    }
                }
                return any;
            }
        };

        auto require_nonempty(const Graph & g) -> void
        {
            if (g.order() < 1)
                throw PreconditionError("graph must have at least one vertex");
        }
    }

    auto gamma(const Graph & g, DominationStyle style) -> int
    {
        require_nonempty(g);
        DominatorTable table(g, style);
        for (int k = 1 ; k <= g.order() ; ++k) {
            SmallestDominatingSets search{ table, k, false, { } };
            if (search.search(0, 0))
                return k;
        }
        // V always dominates
        return g.order();
    }

    auto enumerate_min_cardinality_sds(const Graph & g, DominationStyle style) -> vector<VertexSet>
    {
        require_nonempty(g);
        DominatorTable table(g, style);
        for (int k = 1 ; k <= g.order() ; ++k) {
            SmallestDominatingSets search{ table, k, true, { } };
            if (search.search(0, 0)) {
                vector<VertexSet> result;
                // every branch that succeeds at the first feasible k uses exactly k vertices
                for (auto mask : search.found)
                    result.push_back(VertexSet::from_mask(g.order(), mask));
                return result;
            }
        }
        return { VertexSet::full(g.order()) };
    }

    auto count_all_sds(const Graph & g, DominationStyle style, int exact_limit) -> long long
    {
        require_nonempty(g);
        if (g.order() > std::min(exact_limit, 62))
            throw CapacityError(g.order(), std::min(exact_limit, 62));

        DominatorTable table(g, style);
        long long count = 0;
        for (uint64_t s = 0 ; s <= table.full() ; ++s)
            if (table.dominates(s))
                ++count;
        return count;
    }

    auto minimal_dominating_subset(const Graph & g, const VertexSet & s, DominationStyle style) -> VertexSet
    {
        if (! is_dominating(g, s, style))
            throw PreconditionError("minimal_dominating_subset needs a dominating set");
        auto result = s;
        for (auto v : s.members()) {
            result.reset(v);
            if (! is_dominating(g, result, style))
                result.set(v);
        }
        return result;
    }

    namespace
    {
        // Assigns vertices in index order to at most k blocks, restricted growth. A node
        // is cut when, for some x, more blocks still lack a dominator of x than there are
        // unassigned vertices able to supply one.
        struct DomaticSearch
        {
            const DominatorTable & table;
            int k;
            vector<uint64_t> blocks;
            vector<int> assignment;
            int used = 0;
            long long nodes = 0;

            auto feasible(uint64_t unassigned) const -> bool
            {
                for (Vertex x = 0 ; x < table.order() ; ++x) {
                    auto row = table.closed_dominators(x);
                    int missing = k - used;
                    for (int b = 0 ; b < used ; ++b)
                        if (! (blocks[b] & row))
                            ++missing;
                    if (missing > std::popcount(row & unassigned))
                        return false;
                }
                return true;
            }

            auto search(Vertex v) -> bool
            {
                ++nodes;
                int n = table.order();
                uint64_t unassigned = v >= 64 ? 0 : (table.full() >> v) << v;
                if (n - v < k - used)
                    return false;
                if (! feasible(unassigned))
                    return false;
                if (v == n)
                    return used == k;

                auto bit = uint64_t{1} << v;
                for (int b = 0 ; b < used ; ++b) {
                    blocks[b] |= bit;
                    assignment[v] = b;
                    if (search(v + 1))
                        return true;
                    blocks[b] &= ~bit;
                }
                if (used < k) {
                    blocks[used] = bit;
                    assignment[v] = used++;
                    if (search(v + 1))
                        return true;
                    blocks[--used] = 0;
                }
                return false;
            }
        };
    }

    auto domatic(const Graph & g, DominationStyle style) -> DomaticResult
    {
        require_nonempty(g);
        DominatorTable table(g, style);
        int n = g.order();

        DomaticResult result;
        for (int k = g.min_degree() + 1 ; k >= 1 ; --k) {
            DomaticSearch search{ table, k, vector<uint64_t>(k, 0), vector<int>(n, -1) };
            bool found = search.search(0);
            result.nodes_explored += search.nodes;
            if (found) {
                vector<vector<Vertex>> lists(k);
                for (Vertex v = 0 ; v < n ; ++v)
                    lists[search.assignment[v]].push_back(v);
                result.value = k;
                result.witness = Partition::from_lists(n, lists);
                return result;
            }
        }
        throw PreconditionError("domatic search failed to find the trivial partition");
    }
}
