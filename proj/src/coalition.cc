/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/coalition.hh>
#include <strongco/errors.hh>
#include <strongco/families.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

using std::uint64_t;
using std::vector;

namespace strongco
{
    auto to_string(BlockStatus status) -> std::string_view
    {
        switch (status) {
            case BlockStatus::singleton_full_degree_sds: return "singleton_full_degree_sds";
            case BlockStatus::non_sds_with_partner:      return "non_sds_with_partner";
            case BlockStatus::invalid_sds_block:         return "invalid_sds_block";
            case BlockStatus::non_sds_without_partner:   return "non_sds_without_partner";
        }
        return "?";
    }

    auto forms_coalition(const Graph & g, const VertexSet & a, const VertexSet & b, DominationStyle style) -> bool
    {
        return (! is_dominating(g, a, style)) && (! is_dominating(g, b, style)) && is_dominating(g, a | b, style);
    }

    auto validate_partition(const Graph & g, const Partition & p, DominationStyle style) -> PartitionReport
    {
        if (p.universe() != g.order())
            throw StructuralError("partition covers " + std::to_string(p.universe())
                    + " vertices but the graph has " + std::to_string(g.order()));

        int k = p.size();
        vector<char> dominating(k);
        for (int i = 0 ; i < k ; ++i)
            dominating[i] = is_dominating(g, p.block(i), style);

        PartitionReport report{ true, { } };
        for (int i = 0 ; i < k ; ++i) {
            BlockVerdict verdict{ i, BlockStatus::non_sds_without_partner, { } };
            auto & block = p.block(i);
            if (dominating[i]) {
                bool universal_singleton = block.count() == 1 && g.degree(block.first()) == g.order() - 1;
                verdict.status = universal_singleton ? BlockStatus::singleton_full_degree_sds : BlockStatus::invalid_sds_block;
            }
            else {
                for (int j = 0 ; j < k ; ++j)
                    if (j != i && ! dominating[j] && is_dominating(g, block | p.block(j), style))
                        verdict.partners.push_back(j);
                if (! verdict.partners.empty())
                    verdict.status = BlockStatus::non_sds_with_partner;
            }

            if (verdict.status == BlockStatus::invalid_sds_block || verdict.status == BlockStatus::non_sds_without_partner)
                report.valid = false;
            report.verdicts.push_back(std::move(verdict));
        }
        return report;
    }

    auto coalition_partner_count(const Graph & g, const Partition & p, int block_index, DominationStyle style) -> int
    {
        if (block_index < 0 || block_index >= p.size())
            throw std::out_of_range("block index " + std::to_string(block_index) + " out of range");
        if (p.universe() != g.order())
            throw StructuralError("partition is not over the graph's vertex set");

        int count = 0;
        for (int j = 0 ; j < p.size() ; ++j)
            if (j != block_index && forms_coalition(g, p.block(block_index), p.block(j), style))
                ++count;
        return count;
    }

    auto UpperBounds::applied_names() const -> vector<std::string>
    {
        vector<std::string> result;
        for (auto & r : reasons)
            if (r.status == BoundStatus::applied)
                result.push_back(r.name);
        return result;
    }

    auto upper_bounds(const Graph & g, DominationStyle style, int exact_limit) -> UpperBounds
    {
        int n = g.order();
        UpperBounds result{ n, { { "order", n, BoundStatus::applied } } };
        if (style != DominationStyle::strong)
            return result;

        if (family_f_member(g))
            return UpperBounds{ 0, { { "family_F", 0, BoundStatus::applied } } };

        auto delta = g.min_degree(), big_delta = g.max_degree();
        if (delta == 1) {
            int value = 2 + 2 * big_delta;
            result.reasons.push_back({ "delta2", value, BoundStatus::applied });
            result.bound = std::min(result.bound, value);
        }

        auto at_max = std::count(g.degrees().begin(), g.degrees().end(), big_delta);
        if (n >= 1 && at_max == 1 && big_delta <= n - 2) {
            if (n <= exact_limit && n <= 62) {
                auto r = count_all_sds(g, DominationStyle::strong, exact_limit);
                result.reasons.push_back({ "sds_count", r + 1, BoundStatus::applied });
                if (r + 1 < result.bound)
                    result.bound = static_cast<int>(r + 1);
            }
            else
                result.reasons.push_back({ "sds_count", 0, BoundStatus::unavailable });
        }

        return result;
    }

    namespace
    {
        constexpr std::size_t no_prefix = std::numeric_limits<std::size_t>::max();

        // Depth-first restricted growth search for a valid partition into exactly k blocks.
        class CoalitionSearch
        {
            private:
                const DominatorTable & _table;
                const vector<int> & _degrees;
                int _n, _k;
                vector<uint64_t> _blocks;
                vector<int> _sizes;
                vector<int> _assignment;
                int _used = 0;
                long long _nodes = 0;
                int _stop_depth = -1;
                vector<vector<int>> * _prefixes = nullptr;
                const std::atomic<std::size_t> * _best = nullptr;
                std::size_t _mine = 0;

                auto leaf_valid() const -> bool
                {
                    uint64_t dominating = 0;
                    for (int b = 0 ; b < _k ; ++b)
                        if (_table.dominates(_blocks[b]))
                            dominating |= uint64_t{1} << b;

                    for (int b = 0 ; b < _k ; ++b) {
                        if ((dominating >> b) & 1) {
                            // only a single universal vertex may dominate on its own
                            if (_sizes[b] != 1 || _degrees[std::countr_zero(_blocks[b])] != _n - 1)
                                return false;
                            continue;
                        }
                        bool partnered = false;
                        for (int c = 0 ; c < _k && ! partnered ; ++c)
                            if (c != b && ! ((dominating >> c) & 1) && _table.dominates(_blocks[b] | _blocks[c]))
                                partnered = true;
                        if (! partnered)
                            return false;
                    }
                    return true;
                }

                auto place(Vertex v, int b) -> bool
                {
                    _blocks[b] |= uint64_t{1} << v;
                    ++_sizes[b];
                    _assignment[v] = b;
                    // a dominating block of two or more vertices can never become valid
                    return ! (_sizes[b] >= 2 && _table.dominates(_blocks[b]));
                }

                auto unplace(Vertex v, int b) -> void
                {
                    _blocks[b] &= ~(uint64_t{1} << v);
                    --_sizes[b];
                    _assignment[v] = -1;
                }

            public:
                CoalitionSearch(const DominatorTable & table, const vector<int> & degrees, int k) :
                    _table(table),
                    _degrees(degrees),
                    _n(table.order()),
                    _k(k),
                    _blocks(k, 0),
                    _sizes(k, 0),
                    _assignment(table.order(), -1)
                {
                }

                auto nodes() const -> long long
                {
                    return _nodes;
                }

                auto assignment() const -> const vector<int> &
                {
                    return _assignment;
                }

                auto collect_prefixes(int depth, vector<vector<int>> & out) -> void
                {
                    _stop_depth = depth;
                    _prefixes = &out;
                    search(0);
                    _stop_depth = -1;
                    _prefixes = nullptr;
                }

                /// Replays a prefix produced by collect_prefixes.
                auto load(const vector<int> & prefix) -> void
                {
                    std::fill(_blocks.begin(), _blocks.end(), 0);
                    std::fill(_sizes.begin(), _sizes.end(), 0);
                    std::fill(_assignment.begin(), _assignment.end(), -1);
                    _used = 0;
                    for (std::size_t v = 0 ; v < prefix.size() ; ++v) {
                        place(static_cast<Vertex>(v), prefix[v]);
                        _used = std::max(_used, prefix[v] + 1);
                    }
                }

                /// Gives up on the current prefix once an earlier prefix has a witness.
                auto watch(const std::atomic<std::size_t> * best, std::size_t mine) -> void
                {
                    _best = best;
                    _mine = mine;
                }

                auto search(Vertex v) -> bool
                {
                    ++_nodes;
                    if (_best && _best->load(std::memory_order_relaxed) < _mine)
                        return false;
                    if (_n - v < _k - _used)
                        return false;

                    if (v == _stop_depth) {
                        _prefixes->emplace_back(_assignment.begin(), _assignment.begin() + v);
                        return false;
                    }

                    if (v == _n)
                        return _used == _k && leaf_valid();

                    for (int b = 0 ; b < _used ; ++b) {
                        if (place(v, b) && search(v + 1))
                            return true;
                        unplace(v, b);
                    }

                    if (_used < _k) {
                        int b = _used++;
                        if (place(v, b) && search(v + 1))
                            return true;
                        unplace(v, b);
                        --_used;
                    }

                    return false;
                }
        };

        struct KResult
        {
            bool found = false;
            vector<int> assignment;
            long long nodes = 0;
        };

        auto search_single(const DominatorTable & table, const vector<int> & degrees, int k) -> KResult
        {
            CoalitionSearch search(table, degrees, k);
            KResult result;
            result.found = search.search(0);
            result.nodes = search.nodes();
            if (result.found)
                result.assignment = search.assignment();
            return result;
        }

        auto search_parallel(const DominatorTable & table, const vector<int> & degrees, int k, unsigned workers) -> KResult
        {
            KResult result;
            int depth = std::min(table.order(), 8);

            vector<vector<int>> prefixes;
            {
                CoalitionSearch search(table, degrees, k);
                search.collect_prefixes(depth, prefixes);
                result.nodes += search.nodes();
            }

            std::atomic<std::size_t> next{ 0 }, best{ no_prefix };
            std::atomic<long long> nodes{ 0 };
            std::mutex witness_mutex;
            std::map<std::size_t, vector<int>> witnesses;

            auto work = [&] () {
                CoalitionSearch search(table, degrees, k);
                while (true) {
                    auto i = next.fetch_add(1);
                    if (i >= prefixes.size() || i > best.load())
                        break;

                    search.watch(&best, i);
                    search.load(prefixes[i]);
                    if (search.search(depth)) {
                        std::lock_guard<std::mutex> lock(witness_mutex);
                        witnesses.emplace(i, search.assignment());
                        auto current = best.load();
                        while (i < current && ! best.compare_exchange_weak(current, i))
                            ;
                    }
                }
                nodes.fetch_add(search.nodes());
            };

            vector<std::thread> threads;
            for (unsigned w = 0 ; w < workers ; ++w)
                threads.emplace_back(work);
            for (auto & t : threads)
                t.join();

            result.nodes += nodes.load();
            if (best.load() != no_prefix) {
                result.found = true;
                result.assignment = witnesses.at(best.load());
            }
            return result;
        }
    }

    auto solve(const Graph & g, DominationStyle style, const SolverOptions & options) -> SolveResult
    {
        auto start = std::chrono::steady_clock::now();
        int n = g.order();
        if (n < 1)
            throw PreconditionError("solve needs a graph with at least one vertex");
        int limit = std::min(options.exact_limit, DominatorTable::max_order);
        if (n > limit)
            throw CapacityError(n, limit);

        SolveResult result;
        if (options.use_bounds)
            result.bounds = upper_bounds(g, style, options.exact_limit);
        else
            result.bounds = UpperBounds{ n, { { "order", n, BoundStatus::applied } } };

        auto finish = [&] () -> SolveResult {
            result.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
            return std::move(result);
        };

        if (options.use_bounds && style == DominationStyle::strong && family_f_member(g)) {
            result.value = 0;
            result.certified = true;
            result.certificate = "family_F";
            return finish();
        }

        DominatorTable table(g, style);
        auto & degrees = g.degrees();
        unsigned workers = std::max(1u, options.workers);

        for (int k = result.bounds.bound ; k >= 1 ; --k) {
            auto found = workers == 1 ? search_single(table, degrees, k) : search_parallel(table, degrees, k, workers);
            result.nodes_explored += found.nodes;
            if (found.found) {
                vector<vector<Vertex>> lists(k);
                for (Vertex v = 0 ; v < n ; ++v)
                    lists[found.assignment[v]].push_back(v);
                result.value = k;
                result.witness = Partition::from_lists(n, lists);
                break;
            }
        }

        result.certified = true;
        result.certificate = "exhaustive";
        return finish();
    }

    auto construct_from_domatic(const Graph & g) -> DomaticConstruction
    {
        if (g.order() < 2)
            throw PreconditionError("construct_from_domatic needs at least two vertices");
        if (! degree_stats(g).universal_vertices.empty())
            throw PreconditionError("construct_from_domatic needs a graph without universal vertices");

        constexpr auto strong = DominationStyle::strong;
        auto domatic_partition = domatic(g, strong);
        int k = domatic_partition.value;
        int n = g.order();

        vector<VertexSet> sets = domatic_partition.witness.blocks();

        // all but the last set become minimal, leftovers go to the last set
        for (int i = 0 ; i + 1 < k ; ++i) {
            auto core = minimal_dominating_subset(g, sets[i], strong);
            sets[k - 1] |= sets[i] - core;
            sets[i] = core;
        }

        // with no universal vertex a minimal set has at least two vertices, and
        // removing any vertex from it leaves a non-dominating set
        auto split = [&] (const VertexSet & minimal, vector<VertexSet> & out) {
            VertexSet head(n);
            head.set(minimal.first());
            out.push_back(head);
            out.push_back(minimal - head);
        };

        vector<VertexSet> blocks;
        for (int i = 0 ; i + 1 < k ; ++i)
            split(sets[i], blocks);

        DomaticConstruction result;
        result.strong_domatic_number = k;

        auto & last = sets[k - 1];
        auto last_core = minimal_dominating_subset(g, last, strong);
        split(last_core, blocks);

        auto leftover = last - last_core;
        if (! leftover.empty()) {
            // leftover cannot dominate, or the domatic partition was not maximum
            bool has_partner = std::any_of(blocks.begin(), blocks.end(), [&] (const VertexSet & b) {
                    return forms_coalition(g, leftover, b, strong);
                    });
            if (has_partner) {
                blocks.push_back(leftover);
                result.extra_block = true;
            }
            else
                blocks.back() |= leftover;
        }

        result.partition = Partition(n, std::move(blocks));
        return result;
    }
}
