/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/partition.hh>
#include <strongco/errors.hh>

#include <istream>
#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace strongco
{
    Partition::Partition(int universe, vector<VertexSet> blocks) :
        _universe(universe),
        _blocks(std::move(blocks))
    {
        VertexSet covered(universe);
        for (std::size_t i = 0 ; i < _blocks.size() ; ++i) {
            auto & b = _blocks[i];
            if (b.universe() != universe)
                throw StructuralError("block " + std::to_string(i + 1) + " is over the wrong universe");
            if (b.empty())
                throw StructuralError("block " + std::to_string(i + 1) + " is empty");
            if (b.intersects(covered))
                throw StructuralError("block " + std::to_string(i + 1) + " overlaps an earlier block");
            covered |= b;
        }
        if (covered.count() != universe)
            throw StructuralError("blocks cover " + std::to_string(covered.count()) + " of "
                    + std::to_string(universe) + " vertices");
    }

    auto Partition::from_lists(int universe, const vector<vector<Vertex>> & lists) -> Partition
    {
        vector<VertexSet> blocks;
        for (auto & l : lists) {
            VertexSet b(universe);
            for (auto v : l) {
                if (v < 0 || v >= universe)
                    throw StructuralError("vertex " + std::to_string(v + 1) + " is not in the graph");
                if (b.test(v))
                    throw StructuralError("vertex " + std::to_string(v + 1) + " repeated within a block");
                b.set(v);
            }
            blocks.push_back(std::move(b));
        }
        return Partition(universe, std::move(blocks));
    }

    auto Partition::singletons(int universe) -> Partition
    {
        vector<VertexSet> blocks;
        for (Vertex v = 0 ; v < universe ; ++v)
            blocks.push_back(VertexSet(universe, { v }));
        return Partition(universe, std::move(blocks));
    }

    auto Partition::to_lists() const -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        for (auto & b : _blocks)
            result.push_back(b.members());
        return result;
    }

    auto Partition::block_of(Vertex v) const -> int
    {
        for (std::size_t i = 0 ; i < _blocks.size() ; ++i)
            if (_blocks[i].test(v))
                return static_cast<int>(i);
        throw PreconditionError("vertex not in partition");
    }

    auto parse_partition(std::istream & in, int universe) -> Partition
    {
        vector<vector<Vertex>> lists;
        string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            auto hash = line.find('#');
            if (hash != string::npos)
                line.erase(hash);

            std::istringstream tokens(line);
            vector<Vertex> block;
            string token;
            while (tokens >> token) {
                std::size_t used = 0;
                long long id = 0;
                try {
                    id = std::stoll(token, &used);
                }
                catch (const std::exception &) {
                    throw ParseError(line_number, "expected a vertex id, got '" + token + "'");
                }
                if (used != token.size())
                    throw ParseError(line_number, "expected a vertex id, got '" + token + "'");
                if (id < 1 || id > universe)
                    throw ParseError(line_number, "vertex id " + token + " out of range 1.." + std::to_string(universe));
                block.push_back(static_cast<Vertex>(id - 1));
            }
            if (! block.empty())
                lists.push_back(std::move(block));
        }
        return Partition::from_lists(universe, lists);
    }

    auto parse_partition(std::string_view text, int universe) -> Partition
    {
        std::istringstream in{ string(text) };
        return parse_partition(in, universe);
    }

    auto write_partition(std::ostream & out, const Partition & p) -> void
    {
        for (auto & b : p.blocks()) {
            bool first = true;
            for (auto v : b.members()) {
                out << (first ? "" : " ") << (v + 1);
                first = false;
            }
            out << '\n';
        }
    }

    auto to_partition_text(const Partition & p) -> string
    {
        std::ostringstream out;
        write_partition(out, p);
        return out.str();
    }
}
