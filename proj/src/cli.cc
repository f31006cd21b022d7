/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongco/cli.hh>
#include <strongco/coalition.hh>
#include <strongco/errors.hh>
#include <strongco/families.hh>
#include <strongco/generators.hh>
#include <strongco/scg.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace strongco
{
    namespace
    {
        struct GraphSource
        {
            string file;
            string gen;
        };

        struct NamedGraph
        {
            string name;
            Graph graph;
        };

        auto add_source_options(CLI::App * cmd, GraphSource & source, bool required = true) -> void
        {
            auto file = cmd->add_option("--graph", source.file, "edge-list file (first line 'n m', then 1-based 'u v' lines)");
            auto gen = cmd->add_option("--gen", source.gen, "generator spec such as path:9, complete_bipartite:4,3, family_g:1,1,2");
            file->excludes(gen);
            if (required) {
                auto group_check = [file, gen] (CLI::App *) {
                    if (file->count() + gen->count() == 0)
                        throw CLI::RequiredError("--graph or --gen");
                };
                cmd->callback([=] () { group_check(cmd); });
            }
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in(path);
            if (! in)
                throw PreconditionError("cannot open '" + path + "'");
            std::stringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }

        auto load_graph(const GraphSource & source) -> NamedGraph
        {
            if (! source.gen.empty()) {
                auto spec = parse_family_spec(source.gen);
                return NamedGraph{ to_string(spec), generate(spec) };
            }
            return NamedGraph{ source.file, parse_edge_list(read_file(source.file)) };
        }

        /// Line format, a JSON array of 1-based blocks, or a solve --json record with a witness.
        auto load_partition(const string & path, int universe) -> Partition
        {
            auto text = read_file(path);
            auto start = text.find_first_not_of(" \t\r\n");
            if (start != string::npos && (text[start] == '[' || text[start] == '{')) {
                json doc;
                try {
                    doc = json::parse(text);
                }
                catch (const json::parse_error & e) {
                    throw PreconditionError("partition file '" + path + "' is not valid JSON: " + e.what());
                }
                if (doc.is_object()) {
                    if (! doc.contains("witness") || doc["witness"].is_null())
                        throw StructuralError("record in '" + path + "' has no witness");
                    doc = doc["witness"];
                }
                if (! doc.is_array())
                    throw StructuralError("partition in '" + path + "' must be a list of blocks");
                vector<vector<Vertex>> lists;
                for (auto & block : doc) {
                    if (! block.is_array())
                        throw StructuralError("each block must be a list of vertex ids");
                    vector<Vertex> members;
                    for (auto & id : block) {
                        if (! id.is_number_integer())
                            throw StructuralError("vertex ids must be integers");
                        members.push_back(id.get<int>() - 1);
                    }
                    lists.push_back(std::move(members));
                }
                return Partition::from_lists(universe, lists);
            }
            return parse_partition(text, universe);
        }

        auto witness_json(const optional<Partition> & witness) -> json
        {
            if (! witness)
                return nullptr;
            json blocks = json::array();
            for (auto & list : witness->to_lists()) {
                json block = json::array();
                for (auto v : list)
                    block.push_back(v + 1);
                blocks.push_back(block);
            }
            return blocks;
        }

        auto block_text(const Graph & g, const VertexSet & block) -> string
        {
            string result = "{";
            bool first = true;
            for (auto v : block.members()) {
                result += (first ? "" : ",") + g.label(v);
                first = false;
            }
            return result + "}";
        }

        auto elapsed_ms(const SolveResult & r) -> double
        {
            return std::chrono::duration<double, std::milli>(r.wall_time).count();
        }

        auto solve_record(const string & name, DominationStyle style, const SolveResult & r) -> json
        {
            return json{
                { "graph", name },
                { "style", string(to_string(style)) },
                { "value", r.value },
                { "witness", witness_json(r.witness) },
                { "certified", r.certified },
                { "nodes_explored", r.nodes_explored },
                { "elapsed_ms", elapsed_ms(r) }
            };
        }

        auto bounds_text(const UpperBounds & b) -> string
        {
            string result;
            for (auto & r : b.reasons) {
                if (! result.empty())
                    result += ", ";
                if (r.status == BoundStatus::applied)
                    result += r.name + "=" + std::to_string(r.value);
                else
                    result += r.name + " unavailable";
            }
            return result + " -> " + std::to_string(b.bound);
        }

        struct SolveArgs
        {
            GraphSource source;
            string style = "strong";
            bool json_output = false;
            unsigned workers = 1;
            int max_order = default_exact_limit;
            bool no_bounds = false;
            string witness_out;
        };

        auto cmd_solve(const SolveArgs & a, ostream & out) -> int
        {
            auto style = parse_domination_style(a.style);
            auto [name, g] = load_graph(a.source);
            auto r = solve(g, style, SolverOptions{ a.max_order, a.workers, ! a.no_bounds });

            if (! a.witness_out.empty() && r.witness) {
                std::ofstream f(a.witness_out);
                if (! f)
                    throw PreconditionError("cannot write '" + a.witness_out + "'");
                write_partition(f, *r.witness);
            }

            if (a.json_output) {
                out << solve_record(name, style, r).dump() << '\n';
                return exit_codes::success;
            }

            out << "graph: " << name << " (n=" << g.order() << ", m=" << g.edge_count() << ")\n";
            out << "style: " << to_string(style) << '\n';
            out << "bounds: " << bounds_text(r.bounds) << '\n';
            out << "value: " << r.value << '\n';
            out << "certified: " << (r.certified ? "yes" : "no") << " (" << r.certificate << ")\n";
            out << "nodes_explored: " << r.nodes_explored << '\n';
            out << "elapsed_ms: " << std::fixed << std::setprecision(3) << elapsed_ms(r) << '\n';
            if (r.witness) {
                out << "witness:\n";
                for (int i = 0 ; i < r.witness->size() ; ++i)
                    out << "  V" << (i + 1) << " = " << block_text(g, r.witness->block(i)) << '\n';
            }
            else
                out << "witness: none\n";
            return exit_codes::success;
        }

        struct TableArgs
        {
            string family;
            int min = -1;
            int max = -1;
            int rmax = -1;
            string style = "strong";
            bool json_output = false;
            unsigned workers = 1;
            int max_order = default_exact_limit;
        };

        auto cmd_table(const TableArgs & a, ostream & out) -> int
        {
            auto style = parse_domination_style(a.style);
            vector<FamilySpec> rows;
            int largest = 0;

            if (a.family == "paths" || a.family == "cycles") {
                bool paths = a.family == "paths";
                int lo = a.min >= 0 ? a.min : (paths ? 1 : 3);
                if (a.max < 0)
                    throw PreconditionError("table " + a.family + " needs --max");
                if (lo < (paths ? 1 : 3) || a.max < lo)
                    throw PreconditionError("bad range for table " + a.family);
                for (int n = lo ; n <= a.max ; ++n)
                    rows.push_back(FamilySpec{ paths ? Family::path : Family::cycle, { n } });
                largest = a.max;
            }
            else {
                if (a.rmax < 1)
                    throw PreconditionError("table complete_bipartite needs --rmax >= 1");
                for (int r = 1 ; r <= a.rmax ; ++r)
                    for (int s = 1 ; s <= r ; ++s)
                        rows.push_back(FamilySpec{ Family::complete_bipartite, { r, s } });
                largest = 2 * a.rmax;
            }

            if (largest > a.max_order)
                throw CapacityError(largest, a.max_order);

            bool all_match = true;
            if (! a.json_output)
                out << std::left << std::setw(10) << "param" << std::setw(8) << (style == DominationStyle::strong ? "SC" : "C")
                    << std::setw(8) << "oracle" << "match\n";

            for (auto & spec : rows) {
                auto g = generate(spec);
                auto r = solve(g, style, SolverOptions{ a.max_order, a.workers, true });
                auto oracle = style == DominationStyle::strong ? sc_oracle(spec) : c_oracle(spec);
                optional<bool> match;
                if (oracle.applicable) {
                    match = oracle.value == r.value;
                    all_match = all_match && *match;
                }

                string param;
                for (std::size_t i = 0 ; i < spec.params.size() ; ++i)
                    param += (i ? "," : "") + std::to_string(spec.params[i]);

                if (a.json_output) {
                    auto record = solve_record(to_string(spec), style, r);
                    record["oracle"] = oracle.applicable ? json(oracle.value) : json(nullptr);
                    record["match"] = match ? json(*match) : json(nullptr);
                    out << record.dump() << '\n';
                }
                else
                    out << std::left << std::setw(10) << param << std::setw(8) << r.value
                        << std::setw(8) << (oracle.applicable ? std::to_string(oracle.value) : "-")
                        << (match ? (*match ? "yes" : "NO") : "-") << '\n';
            }

            return all_match ? exit_codes::success : exit_codes::failure;
        }

        struct VerifyArgs
        {
            GraphSource source;
            string partition;
            string style = "strong";
            bool json_output = false;
        };

        auto cmd_verify(const VerifyArgs & a, ostream & out) -> int
        {
            auto style = parse_domination_style(a.style);
            auto [name, g] = load_graph(a.source);
            auto p = load_partition(a.partition, g.order());
            auto report = validate_partition(g, p, style);

            if (a.json_output) {
                json verdicts = json::array();
                for (auto & v : report.verdicts) {
                    json partners = json::array();
                    for (auto j : v.partners)
                        partners.push_back(j + 1);
                    verdicts.push_back(json{ { "block", v.block_index + 1 }, { "status", string(to_string(v.status)) }, { "partners", partners } });
                }
                out << json{ { "graph", name }, { "style", string(to_string(style)) }, { "valid", report.valid },
                    { "blocks", p.size() }, { "verdicts", verdicts } }.dump() << '\n';
            }
            else {
                out << "graph: " << name << " (n=" << g.order() << ")\n";
                out << "style: " << to_string(style) << '\n';
                out << "blocks: " << p.size() << '\n';
                for (auto & v : report.verdicts) {
                    out << "  V" << (v.block_index + 1) << " = " << block_text(g, p.block(v.block_index)) << ": " << to_string(v.status);
                    if (! v.partners.empty()) {
                        out << ", partners";
                        for (auto j : v.partners)
                            out << " V" << (j + 1);
                    }
                    out << '\n';
                }
                out << (report.valid ? "valid" : "invalid") << '\n';
            }
            return report.valid ? exit_codes::success : exit_codes::failure;
        }

        struct ScgArgs
        {
            GraphSource source;
            string partition;
            string dot = "-";
            string style = "strong";
        };

        auto cmd_scg(const ScgArgs & a, ostream & out, ostream & err) -> int
        {
            auto style = parse_domination_style(a.style);
            auto [name, g] = load_graph(a.source);
            auto p = load_partition(a.partition, g.order());

            CoalitionGraph cg;
            try {
                cg = build_scg(g, p, style);
            }
            catch (const InvalidPartitionError & e) {
                err << "invalid coalition partition: " << e.what() << '\n';
                for (auto & v : e.report().verdicts)
                    err << "  V" << (v.block_index + 1) << ": " << to_string(v.status) << '\n';
                return exit_codes::failure;
            }

            auto dot = export_dot(cg);
            if (a.dot == "-")
                out << dot;
            else {
                std::ofstream f(a.dot, std::ios::binary);
                if (! f)
                    throw PreconditionError("cannot write '" + a.dot + "'");
                f << dot;
            }
            out << "vertices: " << p.size() << '\n';
            out << "edges: " << cg.edges.size() << '\n';
            return exit_codes::success;
        }

        struct CheckBoundsArgs
        {
            GraphSource source;
            int random = 0;
            int n = 0;
            optional<std::uint64_t> seed;
            double p = 0.5;
            bool allow_universal = false;
            bool allow_disconnected = false;
            bool json_output = false;
            unsigned workers = 1;
            int max_order = default_exact_limit;
        };

        enum class CheckStatus
        {
            ok,
            violated,
            info
        };

        struct Check
        {
            string name;
            CheckStatus status;
            string detail;
        };

        auto status_text(CheckStatus s) -> string
        {
            switch (s) {
                case CheckStatus::ok:       return "ok";
                case CheckStatus::violated: return "VIOLATED";
                case CheckStatus::info:     return "info";
            }
            return "?";
        }

        auto check_graph(const Graph & g, const CheckBoundsArgs & a, int & value_out) -> vector<Check>
        {
            constexpr auto strong = DominationStyle::strong;
            vector<Check> checks;
            auto expect = [&] (const string & name, bool holds, const string & detail) {
                checks.push_back(Check{ name, holds ? CheckStatus::ok : CheckStatus::violated, detail });
            };

            int n = g.order();
            auto stats = degree_stats(g);
            bool has_universal = ! stats.universal_vertices.empty();

            // the value being checked is computed without any of the bounds under test
            auto exact = solve(g, strong, SolverOptions{ a.max_order, a.workers, false });
            auto bounded = solve(g, strong, SolverOptions{ a.max_order, a.workers, true });
            int sc = exact.value;
            value_out = sc;

            expect("bounded_search_agrees", bounded.value == sc,
                    "with bounds " + std::to_string(bounded.value) + ", without " + std::to_string(sc));

            for (auto & bound : upper_bounds(g, strong, a.max_order).reasons) {
                if (bound.status != BoundStatus::applied) {
                    checks.push_back(Check{ "upper_bound_" + bound.name, CheckStatus::info, "unavailable above the exact limit" });
                    continue;
                }
                bool holds = sc <= bound.value;
                auto detail = "SC=" + std::to_string(sc) + " <= " + std::to_string(bound.value);
                if (bound.name == "sds_count")
                    checks.push_back(Check{ "upper_bound_sds_count", CheckStatus::info, detail + (holds ? " holds" : " does not hold") });
                else
                    expect("upper_bound_" + bound.name, holds, detail);
            }

            if (n >= 2 && ! has_universal) {
                auto d = domatic(g, strong).value;
                expect("sc_at_least_twice_strong_domatic", sc >= 2 * d,
                        "SC=" + std::to_string(sc) + ", 2*d_st=" + std::to_string(2 * d));
                auto built = construct_from_domatic(g);
                auto report = validate_partition(g, built.partition, strong);
                expect("domatic_construction_valid", report.valid && built.partition.size() >= 2 * d,
                        std::to_string(built.partition.size()) + " blocks" + (built.extra_block ? " (extra leftover block)" : "")
                        + (report.valid ? ", valid" : ", INVALID"));
                expect("no_universal_implies_at_least_two", sc >= 2, "SC=" + std::to_string(sc));
            }

            if (exact.witness) {
                int worst = 0;
                for (int i = 0 ; i < exact.witness->size() ; ++i)
                    worst = std::max(worst, coalition_partner_count(g, *exact.witness, i, strong));
                expect("partners_at_most_max_degree_plus_one", worst <= stats.max_degree + 1,
                        "max partners " + std::to_string(worst) + ", Delta+1=" + std::to_string(stats.max_degree + 1));
            }

            if (stats.min_degree == 1)
                expect("min_degree_one_implies_at_most_2_plus_2_max_degree", sc <= 2 + 2 * stats.max_degree,
                        "SC=" + std::to_string(sc) + ", 2+2*Delta=" + std::to_string(2 + 2 * stats.max_degree));

            if (sc < 2)
                expect("below_two_implies_universal_vertex", has_universal, "SC=" + std::to_string(sc));

            expect("one_iff_single_vertex", (sc == 1) == (n == 1), "SC=" + std::to_string(sc) + ", n=" + std::to_string(n));

            if (family_f_member(g))
                expect("family_F_has_none", sc == 0, "non-complete with a universal vertex, SC=" + std::to_string(sc));
            else
                expect("not_family_F_between_one_and_order", 1 <= sc && sc <= n, "SC=" + std::to_string(sc));

            return checks;
        }

        auto cmd_check_bounds(const CheckBoundsArgs & a, ostream & out) -> int
        {
            vector<NamedGraph> graphs;
            if (a.random > 0) {
                if (! a.seed)
                    throw PreconditionError("--random needs --seed");
                if (a.n < 1)
                    throw PreconditionError("--random needs --n >= 1");
                if (a.n > a.max_order)
                    throw CapacityError(a.n, a.max_order);
                auto sample = sample_random_graphs(a.random, a.n, a.p, *a.seed,
                        SampleFilter{ ! a.allow_disconnected, ! a.allow_universal });
                for (std::size_t i = 0 ; i < sample.size() ; ++i) {
                    std::ostringstream name;
                    name << "random:n=" << a.n << ",p=" << a.p << ",seed=" << *a.seed << "#" << (i + 1);
                    graphs.push_back(NamedGraph{ name.str(), std::move(sample[i]) });
                }
            }
            else if (! a.source.file.empty() || ! a.source.gen.empty())
                graphs.push_back(load_graph(a.source));
            else
                throw PreconditionError("check-bounds needs --graph, --gen or --random");

            int violations = 0;
            for (auto & [name, g] : graphs) {
                int value = 0;
                auto checks = check_graph(g, a, value);
                int here = static_cast<int>(std::count_if(checks.begin(), checks.end(), [] (auto & c) { return c.status == CheckStatus::violated; }));
                violations += here;

                if (a.json_output) {
                    json list = json::array();
                    for (auto & c : checks)
                        list.push_back(json{ { "name", c.name }, { "status", status_text(c.status) }, { "detail", c.detail } });
                    out << json{ { "graph", name }, { "style", "strong" }, { "value", value }, { "checks", list }, { "violations", here } }.dump() << '\n';
                }
                else {
                    out << "graph: " << name << " (n=" << g.order() << ", delta=" << g.min_degree() << ", Delta=" << g.max_degree() << ")\n";
                    out << "  SC = " << value << '\n';
                    for (auto & c : checks)
                        out << "  [" << status_text(c.status) << "] " << c.name << ": " << c.detail << '\n';
                }
            }

            if (! a.json_output)
                out << "graphs: " << graphs.size() << ", violations: " << violations << '\n';
            return violations == 0 ? exit_codes::success : exit_codes::failure;
        }
    }

    auto run_cli(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Exact strong domination and strong coalition invariants of small graphs" };
        app.name("strongco");
        app.require_subcommand(1);

        auto add_common = [] (CLI::App * cmd, unsigned & workers, int & max_order) {
            cmd->add_option("--workers", workers, "search threads (1 gives a deterministic witness)")->check(CLI::Range(1u, 256u));
            cmd->add_option("--max-order", max_order, "largest order solved exactly")->check(CLI::Range(1, DominatorTable::max_order));
        };

        SolveArgs solve_args;
        auto solve_cmd = app.add_subcommand("solve", "compute SC(G) (or C(G) with --style plain) with a witness partition");
        add_source_options(solve_cmd, solve_args.source);
        solve_cmd->add_option("--style", solve_args.style, "strong or plain")->check(CLI::IsMember({ "strong", "plain" }));
        solve_cmd->add_flag("--json", solve_args.json_output, "one JSON record");
        solve_cmd->add_flag("--no-bounds", solve_args.no_bounds, "search every k from n down, without upper bounds");
        solve_cmd->add_option("--witness-out", solve_args.witness_out, "write the witness in partition-file format");
        add_common(solve_cmd, solve_args.workers, solve_args.max_order);

        TableArgs table_args;
        auto table_cmd = app.add_subcommand("table", "solve a family over a range and compare with the closed forms");
        table_cmd->add_option("family", table_args.family, "paths, cycles or complete_bipartite")->required()
            ->check(CLI::IsMember({ "paths", "cycles", "complete_bipartite" }));
        table_cmd->add_option("--min", table_args.min, "smallest order");
        table_cmd->add_option("--max", table_args.max, "largest order");
        table_cmd->add_option("--rmax", table_args.rmax, "largest part size for complete_bipartite");
        table_cmd->add_option("--style", table_args.style, "strong or plain")->check(CLI::IsMember({ "strong", "plain" }));
        table_cmd->add_flag("--json", table_args.json_output, "one JSON record per row");
        add_common(table_cmd, table_args.workers, table_args.max_order);

        VerifyArgs verify_args;
        auto verify_cmd = app.add_subcommand("verify", "check a partition file against the coalition partition definition");
        add_source_options(verify_cmd, verify_args.source);
        verify_cmd->add_option("--partition", verify_args.partition, "one block per line, 1-based ids (or a solve --json record)")->required();
        verify_cmd->add_option("--style", verify_args.style, "strong or plain")->check(CLI::IsMember({ "strong", "plain" }));
        verify_cmd->add_flag("--json", verify_args.json_output, "one JSON record");

        ScgArgs scg_args;
        auto scg_cmd = app.add_subcommand("scg", "build the coalition graph of a partition and write it as DOT");
        add_source_options(scg_cmd, scg_args.source);
        scg_cmd->add_option("--partition", scg_args.partition, "partition file")->required();
        scg_cmd->add_option("--dot", scg_args.dot, "output path, - for stdout");
        scg_cmd->add_option("--style", scg_args.style, "strong or plain")->check(CLI::IsMember({ "strong", "plain" }));

        CheckBoundsArgs bounds_args;
        std::uint64_t seed = 0;
        auto bounds_cmd = app.add_subcommand("check-bounds", "evaluate the known bounds against exact values");
        add_source_options(bounds_cmd, bounds_args.source, false);
        bounds_cmd->add_option("--random", bounds_args.random, "number of random graphs to sample");
        bounds_cmd->add_option("--n", bounds_args.n, "order of the sampled graphs");
        auto seed_opt = bounds_cmd->add_option("--seed", seed, "sampling seed");
        bounds_cmd->add_option("--p", bounds_args.p, "edge probability")->check(CLI::Range(0.0, 1.0));
        bounds_cmd->add_flag("--allow-universal", bounds_args.allow_universal, "keep sampled graphs with a universal vertex");
        bounds_cmd->add_flag("--allow-disconnected", bounds_args.allow_disconnected, "keep disconnected sampled graphs");
        bounds_cmd->add_flag("--json", bounds_args.json_output, "one JSON record per graph");
        add_common(bounds_cmd, bounds_args.workers, bounds_args.max_order);

        GraphSource gen_source;
        auto gen_cmd = app.add_subcommand("generate", "print a generated graph in edge-list format");
        gen_cmd->add_option("spec", gen_source.gen, "generator spec")->required();

        try {
            vector<string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        }
        catch (const CLI::ParseError & e) {
            int code = app.exit(e, out, err);
            return code == 0 ? exit_codes::success : exit_codes::failure;
        }

        try {
            if (*solve_cmd)
                return cmd_solve(solve_args, out);
            if (*table_cmd)
                return cmd_table(table_args, out);
            if (*verify_cmd)
                return cmd_verify(verify_args, out);
            if (*scg_cmd)
                return cmd_scg(scg_args, out, err);
            if (*bounds_cmd) {
                if (seed_opt->count())
                    bounds_args.seed = seed;
                return cmd_check_bounds(bounds_args, out);
            }
            if (*gen_cmd) {
                write_edge_list(out, load_graph(gen_source).graph);
                return exit_codes::success;
            }
        }
        catch (const CapacityError & e) {
            err << "error: " << e.what() << '\n';
            return exit_codes::capacity;
        }
        catch (const std::exception & e) {
            err << "error: " << e.what() << '\n';
            return exit_codes::failure;
        }

        return exit_codes::failure;
    }
}
