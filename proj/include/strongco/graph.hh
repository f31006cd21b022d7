/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGCO_GUARD_GRAPH_HH
#define STRONGCO_GUARD_GRAPH_HH 1

#include <strongco/vertex_set.hh>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongco
{
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * An immutable simple undirected graph. Vertices are 0-based internally;
     * labels default to the 1-based names v1, ..., vn used in all text I/O.
     */
    class Graph
    {
        private:
            int _order = 0;
            std::vector<VertexSet> _adjacency;
            std::vector<int> _degrees;
            std::vector<std::string> _labels;

        public:
            Graph() = default;

            /// Duplicate edges collapse. Throws PreconditionError on self-loops or out-of-range endpoints.
            Graph(int order, const std::vector<Edge> & edges, std::vector<std::string> labels = { });

            auto order() const noexcept -> int
            {
                return _order;
            }

            auto adjacent(Vertex u, Vertex v) const -> bool
            {
                return _adjacency[u].test(v);
            }

            auto neighbourhood(Vertex v) const -> const VertexSet &
            {
                return _adjacency[v];
            }

            auto degree(Vertex v) const -> int
            {
                return _degrees[v];
            }

            auto degrees() const -> const std::vector<int> &
            {
                return _degrees;
            }

            auto label(Vertex v) const -> const std::string &
            {
                return _labels[v];
            }

            auto labels() const -> const std::vector<std::string> &
            {
                return _labels;
            }

            /// Sorted, each edge once as (u, v) with u < v.
            auto edges() const -> std::vector<Edge>;
            auto edge_count() const -> int;

            auto min_degree() const -> int;
            auto max_degree() const -> int;
            auto is_complete() const -> bool;
            auto is_regular() const -> bool;
            auto is_connected() const -> bool;

            /// Same vertex count and edge set; labels are ignored.
            auto same_structure(const Graph & other) const -> bool;
    };

    struct DegreeStats
    {
        int min_degree = 0;
        int max_degree = 0;
        VertexSet universal_vertices;
    };

    auto degree_stats(const Graph & g) -> DegreeStats;

    /**
     * Reads "n m" followed by m lines "u v" (1-based). Blank lines and lines
     * starting with '#' are skipped. Throws ParseError naming the line.
     */
    auto parse_edge_list(std::istream & in) -> Graph;
    auto parse_edge_list(std::string_view text) -> Graph;

    /// Writes the format read by parse_edge_list, with edges sorted.
    auto write_edge_list(std::ostream & out, const Graph & g) -> void;
    auto to_edge_list(const Graph & g) -> std::string;
}

#endif
