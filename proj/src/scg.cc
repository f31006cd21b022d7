/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/scg.hh>

#include <algorithm>
#include <sstream>

using std::string;

namespace strongco
{
    InvalidPartitionError::InvalidPartitionError(const string & message, PartitionReport report) :
        std::invalid_argument(message),
        _report(std::move(report))
    {
    }

    auto CoalitionGraph::degree(int block) const -> int
    {
        return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&] (auto & e) {
                    return e.first == block || e.second == block;
                    }));
    }

    auto build_scg(const Graph & g, const Partition & p, DominationStyle style) -> CoalitionGraph
    {
        auto report = validate_partition(g, p, style);
        if (! report.valid) {
            for (auto & v : report.verdicts)
                if (v.status == BlockStatus::invalid_sds_block || v.status == BlockStatus::non_sds_without_partner)
                    throw InvalidPartitionError("block V" + std::to_string(v.block_index + 1) + " is "
                            + string(to_string(v.status)), std::move(report));
        }

        CoalitionGraph result{ p, { }, { } };
        for (int i = 0 ; i < p.size() ; ++i) {
            string label = "V" + std::to_string(i + 1) + "={";
            bool first = true;
            for (auto v : p.block(i).members()) {
                label += (first ? "" : ",") + g.label(v);
                first = false;
            }
            result.vertex_labels.push_back(label + "}");
        }

        // computed from the pairwise union checks rather than the verdict partner lists
        for (int i = 0 ; i < p.size() ; ++i)
            for (int j = i + 1 ; j < p.size() ; ++j)
                if (forms_coalition(g, p.block(i), p.block(j), style))
                    result.edges.emplace_back(i, j);

        return result;
    }

    auto export_dot(const CoalitionGraph & cg) -> string
    {
        std::ostringstream out;
        out << "graph SCG {\n";
        for (std::size_t i = 0 ; i < cg.vertex_labels.size() ; ++i)
            out << "    " << (i + 1) << " [label=\"" << cg.vertex_labels[i] << "\"];\n";

        auto edges = cg.edges;
        std::sort(edges.begin(), edges.end());
        for (auto [i, j] : edges)
            out << "    " << (i + 1) << " -- " << (j + 1) << ";\n";
        out << "}\n";
        return out.str();
    }
}
