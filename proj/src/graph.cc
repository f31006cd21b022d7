/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/graph.hh>
#include <strongco/errors.hh>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace strongco
{
    Graph::Graph(int order, const vector<Edge> & edges, vector<string> labels) :
        _order(order),
        _degrees(order, 0),
        _labels(std::move(labels))
    {
        if (order < 0)
            throw PreconditionError("negative graph order");

        _adjacency.assign(order, VertexSet(order));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= order || v < 0 || v >= order)
                throw PreconditionError("edge endpoint out of range");
            if (u == v)
                throw PreconditionError("self-loop on vertex " + std::to_string(u + 1));
            _adjacency[u].set(v);
            _adjacency[v].set(u);
        }

        for (Vertex v = 0 ; v < order ; ++v)
            _degrees[v] = _adjacency[v].count();

        if (_labels.empty()) {
            for (Vertex v = 0 ; v < order ; ++v)
                _labels.push_back("v" + std::to_string(v + 1));
        }
        else if (static_cast<int>(_labels.size()) != order)
            throw PreconditionError("label count does not match graph order");
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        for (Vertex u = 0 ; u < _order ; ++u)
            for (auto v : _adjacency[u].members())
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::edge_count() const -> int
    {
        int total = 0;
        for (auto d : _degrees)
            total += d;
        return total / 2;
    }

    auto Graph::min_degree() const -> int
    {
        return _degrees.empty() ? 0 : *std::min_element(_degrees.begin(), _degrees.end());
    }

    auto Graph::max_degree() const -> int
    {
        return _degrees.empty() ? 0 : *std::max_element(_degrees.begin(), _degrees.end());
    }

    auto Graph::is_complete() const -> bool
    {
        return std::all_of(_degrees.begin(), _degrees.end(), [&] (int d) { return d == _order - 1; });
    }

    auto Graph::is_regular() const -> bool
    {
        return min_degree() == max_degree();
    }

    auto Graph::is_connected() const -> bool
    {
        if (_order == 0)
            return true;

        VertexSet seen(_order), frontier(_order);
        seen.set(0);
        frontier.set(0);
        while (! frontier.empty()) {
            VertexSet next(_order);
            for (auto v : frontier.members())
                next |= _adjacency[v];
            next -= seen;
            seen |= next;
            frontier = std::move(next);
        }
        return seen.count() == _order;
    }

    auto Graph::same_structure(const Graph & other) const -> bool
    {
        return _order == other._order && _adjacency == other._adjacency;
    }

    auto degree_stats(const Graph & g) -> DegreeStats
    {
        DegreeStats result{ g.min_degree(), g.max_degree(), VertexSet(g.order()) };
        for (Vertex v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) == g.order() - 1)
                result.universal_vertices.set(v);
        return result;
    }

    namespace
    {
        auto parse_int(const string & token, int line) -> long long
        {
            std::size_t used = 0;
            long long value = 0;
            try {
                value = std::stoll(token, &used);
            }
            catch (const std::exception &) {
                throw ParseError(line, "expected an integer, got '" + token + "'");
            }
            if (used != token.size())
                throw ParseError(line, "expected an integer, got '" + token + "'");
            return value;
        }

        auto split(const string & line) -> vector<string>
        {
            std::istringstream s(line);
            vector<string> result;
            string token;
            while (s >> token)
                result.push_back(token);
            return result;
        }

        auto is_skippable(const string & line) -> bool
        {
            auto p = line.find_first_not_of(" \t\r");
            return p == string::npos || line[p] == '#';
        }
    }

    auto parse_edge_list(std::istream & in) -> Graph
    {
        string line;
        int line_number = 0;

        auto next_line = [&] () -> bool {
            while (std::getline(in, line)) {
                ++line_number;
                if (! is_skippable(line))
                    return true;
            }
            return false;
        };

        if (! next_line())
            throw ParseError(line_number + 1, "missing 'n m' header");

        auto header = split(line);
        if (header.size() != 2)
            throw ParseError(line_number, "header must be 'n m'");
        auto n = parse_int(header[0], line_number), m = parse_int(header[1], line_number);
        if (n < 0 || m < 0)
            throw ParseError(line_number, "header values must be nonnegative");
        if (n > 1'000'000)
            throw ParseError(line_number, "vertex count too large");

        vector<Edge> edges;
        for (long long i = 0 ; i < m ; ++i) {
            if (! next_line())
                throw ParseError(line_number + 1, "expected " + std::to_string(m) + " edge lines, found " + std::to_string(i));
            auto tokens = split(line);
            if (tokens.size() != 2)
                throw ParseError(line_number, "edge line must be 'u v'");
            auto u = parse_int(tokens[0], line_number), v = parse_int(tokens[1], line_number);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_number, "vertex index out of range 1.." + std::to_string(n));
            if (u == v)
                throw ParseError(line_number, "self-loop on vertex " + std::to_string(u));
            edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
        }

        if (next_line())
            throw ParseError(line_number, "unexpected content after " + std::to_string(m) + " edge lines");

        return Graph(static_cast<int>(n), edges);
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::istringstream in{ string(text) };
        return parse_edge_list(in);
    }

    auto write_edge_list(std::ostream & out, const Graph & g) -> void
    {
        auto edges = g.edges();
        out << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << (u + 1) << ' ' << (v + 1) << '\n';
    }

    auto to_edge_list(const Graph & g) -> string
    {
        std::ostringstream out;
        write_edge_list(out, g);
        return out.str();
    }
}
