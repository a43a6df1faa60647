// planecount: command-line surface over the plane-graph toolkit.
//
// Subcommands:
//   analyze          per-graph/per-embedding verdict records (JSON lines)
//   color            3-coloring records via peeling or exact search
//   verify-theorems  exhaustive desk-scale sweeps (exit 1 on any violation)
//   bounds           exact rational bound table for a given m and n
//   enumerate        canonical graph6 corpus generator
//
// JSON records go to stdout, human-readable summaries to stderr.
// Exit codes: 0 success, 1 violation found, 2 input/usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "planecount/analysis.hpp"
#include "planecount/bounds.hpp"
#include "planecount/coloring.hpp"
#include "planecount/enumerate.hpp"
#include "planecount/graph6.hpp"
#include "planecount/planar_code.hpp"
#include "planecount/verify.hpp"

using json = nlohmann::ordered_json;
using namespace planecount;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> graph6_lines(const std::string& data) {
    std::string_view rest = data;
    if (rest.substr(0, 10) == ">>graph6<<")
        rest.remove_prefix(10);
    std::vector<std::string> lines;
    while (!rest.empty()) {
        std::size_t nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty())
            lines.emplace_back(line);
        if (nl == std::string_view::npos)
            break;
        rest.remove_prefix(nl + 1);
    }
    return lines;
}

json to_json(const GraphCounts& c) {
    return {{"n", c.n}, {"e", c.e}, {"f", c.f}, {"n3", c.n3}, {"f3", c.f3}, {"e3", c.e3}};
}

json to_json(const StructureReport& r) {
    json cycles = json::array();
    for (const auto& [len, witness] : r.forbidden_cycles_found)
        cycles.push_back({{"length", len}, {"witness", witness}});
    return {{"min_degree", r.min_degree},
            {"connected", r.connected},
            {"has_adjacent_triangles", r.has_adjacent_triangles},
            {"triangle_count", r.triangle_count},
            {"cycles_found", cycles}};
}

json to_json(const Theorem4Verdict& v) {
    return {{"hypotheses_hold", v.hypotheses_hold},
            {"connected", v.connected},
            {"min_degree_ok", v.min_degree_ok},
            {"diamond_free", v.diamond_free},
            {"conclusion_holds", v.conclusion_holds},
            {"slack", v.slack.to_string()}};
}

json to_json(const VerdictRecord& rec) {
    json out;
    out["graph_id"] = rec.graph_id;
    out["graph6"] = rec.graph6;
    out["structure"] = to_json(rec.structure);
    out["coloring"] = {{"outcome", to_string(rec.coloring_outcome)}};
    if (rec.coloring) {
        out["coloring"]["k"] = rec.coloring->k;
        out["coloring"]["assignment"] = rec.coloring->assignment;
    }
    if (rec.has_embedding) {
        out["rotation"] = *rec.rotation;
        out["counts"] = to_json(rec.counts);
        out["face_lengths"] = rec.face_lengths;
        out["theorem4"] = to_json(*rec.theorem4);
        json checks = json::array();
        for (const BoundCheck& b : rec.bounds_checked)
            checks.push_back(
                {{"name", b.name}, {"holds", b.holds}, {"slack", b.slack.to_string()}});
        out["bounds_checked"] = checks;
    }
    if (rec.error)
        out["error"] = *rec.error;
    return out;
}

long long default_budget() {
    if (const char* env = std::getenv("PLANECOUNT_BUDGET")) {
        try {
            long long v = std::stoll(env);
            if (v > 0)
                return v;
        } catch (const std::exception&) {
            std::cerr << "planecount: ignoring unparsable PLANECOUNT_BUDGET\n";
        }
    }
    return kDefaultSearchBudget;
}

struct InputGraphs {
    std::vector<Graph> graphs;
    std::vector<RotationSystem> rotations;  // only for planar_code
};

InputGraphs load_input(const std::string& path, const std::string& format) {
    InputGraphs in;
    std::string data = read_all(path);
    if (format == "graph6") {
        for (const std::string& line : graph6_lines(data))
            in.graphs.push_back(parse_graph6(line));
    } else {
        in.rotations = parse_planar_code(data);
        for (const RotationSystem& rs : in.rotations)
            in.graphs.push_back(rs.underlying_graph());
    }
    return in;
}

int cmd_analyze(const std::string& input, const std::string& format, std::string embedding,
                long long budget) {
    if (embedding.empty())
        embedding = format == "planar_code" ? "given" : "all";
    if (embedding == "given" && format == "graph6") {
        std::cerr << "planecount analyze: graph6 input carries no embedding; "
                     "use --embedding all\n";
        return kExitInputError;
    }

    InputGraphs in = load_input(input, format);
    AnalysisOptions opts;
    opts.color_budget = budget;
    long long records = 0, errors = 0;
    for (std::size_t i = 0; i < in.graphs.size(); ++i) {
        std::string id = std::to_string(i);
        if (embedding == "all") {
            for (const VerdictRecord& rec : analyze_all_embeddings(in.graphs[i], id, opts)) {
                std::cout << to_json(rec).dump() << '\n';
                ++records;
            }
        } else {
            VerdictRecord rec = analyze_graph(in.graphs[i], id, opts);
            try {
                PlaneGraph pg(in.rotations[i]);
                rec = analyze_plane_graph(pg, rec, id);
            } catch (const std::runtime_error& e) {
                rec.error = e.what();
                ++errors;
            }
            std::cout << to_json(rec).dump() << '\n';
            ++records;
        }
    }
    std::cerr << "analyzed " << in.graphs.size() << " graph(s), " << records << " record(s), "
              << errors << " embedding error(s)\n";
    return 0;
}

int cmd_color(const std::string& input, const std::string& format, int k,
              const std::string& strategy, long long budget) {
    if (strategy == "peel" && k != 3) {
        std::cerr << "planecount color: --strategy peel colors with exactly 3 colors\n";
        return kExitInputError;
    }
    InputGraphs in = load_input(input, format);
    for (std::size_t i = 0; i < in.graphs.size(); ++i) {
        const Graph& g = in.graphs[i];
        json rec;
        rec["graph_id"] = std::to_string(i);
        rec["graph6"] = write_graph6(g);
        rec["n"] = g.vertex_count();
        rec["e"] = g.edge_count();
        rec["k"] = k;

        bool try_peel = (strategy == "peel" || (strategy == "auto" && k == 3));
        bool done = false;
        if (try_peel) {
            PeelTrace trace = peel_order(g);
            if (trace.complete()) {
                Coloring c = greedy_color_from_peel(g, trace);
                verify_coloring(g, c);
                rec["strategy"] = "peel";
                rec["outcome"] = "peeled";
                rec["colors_used"] = c.colors_used();
                rec["assignment"] = c.assignment;
                done = true;
            } else if (strategy == "peel") {
                rec["strategy"] = "peel";
                rec["outcome"] = "stuck";
                rec["stuck_core_size"] = trace.stuck_at->vertices.size();
                done = true;
            }
        }
        if (!done) {
            ColorSearchResult res = exact_k_color(g, k, budget);
            rec["strategy"] = "exact";
            rec["nodes"] = res.nodes_explored;
            switch (res.status) {
                case ColorSearchStatus::Colored:
                    verify_coloring(g, *res.coloring);
                    rec["outcome"] = "exact";
                    rec["colors_used"] = res.coloring->colors_used();
                    rec["assignment"] = res.coloring->assignment;
                    break;
                case ColorSearchStatus::Infeasible:
                    rec["outcome"] = "infeasible";
                    break;
                case ColorSearchStatus::BudgetExceeded:
                    rec["outcome"] = "budget";
                    break;
            }
        }
        std::cout << rec.dump() << '\n';
    }
    std::cerr << "colored " << in.graphs.size() << " graph(s)\n";
    return 0;
}

int cmd_verify(int theorem, int max_n, long long budget) {
    TheoremSuiteReport r = verify_theorem(theorem, max_n, budget);
    for (const std::string& payload : r.violation_payloads) {
        json v = {{"type", "violation"}, {"theorem", r.theorem}, {"payload", payload}};
        std::cout << v.dump() << '\n';
    }
    json summary = {{"type", "summary"},
                    {"theorem", r.theorem},
                    {"max_n", r.max_n},
                    {"graphs_enumerated", r.graphs_enumerated},
                    {"qualifying_graphs", r.qualifying_graphs},
                    {"instances_checked", r.instances_checked},
                    {"violations", r.violations},
                    {"budget_exhaustions", r.budget_exhaustions}};
    std::cout << summary.dump() << '\n';
    std::cerr << "theorem " << r.theorem << " sweep, n <= " << r.max_n << ":\n"
              << "  graphs enumerated:   " << r.graphs_enumerated << '\n'
              << "  qualifying graphs:   " << r.qualifying_graphs << '\n'
              << "  instances checked:   " << r.instances_checked << '\n'
              << "  budget exhaustions:  " << r.budget_exhaustions << '\n'
              << "  violations: " << r.violations << '\n';
    return r.clean() ? 0 : kExitViolation;
}

int cmd_bounds(int m, long long n) {
    BoundChain chain = BoundChain::for_m(m);
    ContradictionReport cr = contradiction_report(m);
    std::cout << "bounds for minimum non-triangular face length m = " << m << ", n = " << n
              << "\n"
              << "  face coefficient   f < " << chain.face_coefficient.to_string() << " * e\n"
              << "  edge bound         e < " << chain.edge_slope.to_string() << " * n - "
              << chain.edge_offset.to_string() << " = " << edge_upper_bound(m, n).to_string()
              << "\n"
              << "  4-critical bound   e >= "
              << ky_lower_bound(std::max<long long>(n, 4)).to_string() << "\n";
    if (cr.always_contradicts) {
        std::cout << "  contradiction      always (no counterexample of any order)\n";
    } else {
        std::cout << "  contradiction      fails from n = " << *cr.threshold_n
                  << " (counting slope " << cr.upper_slope.to_string() << " exceeds "
                  << cr.ky_slope.to_string() << ")\n";
    }
    return 0;
}

int cmd_enumerate(int max_n, bool all_graphs, int min_degree, std::vector<int> forbid,
                  bool planar) {
    CorpusFilter filter;
    filter.max_n = max_n;
    filter.require_connected = !all_graphs;
    filter.require_planar = planar;
    if (min_degree >= 0)
        filter.min_degree = min_degree;
    if (!forbid.empty())
        filter.forbid_cycles = {{forbid[0], forbid[1]}};
    std::vector<Graph> graphs = enumerate_small_graphs(filter);
    for (const Graph& g : graphs)
        std::cout << write_graph6(g) << '\n';
    std::cerr << "enumerated " << graphs.size() << " graph(s)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph analysis toolkit: embeddings, exact bounds, 3-colorings"};
    app.require_subcommand(1);
    long long budget = default_budget();

    std::string input = "-";
    std::string format = "graph6";
    std::string embedding;
    auto* analyze = app.add_subcommand("analyze", "emit verdict records as JSON lines");
    analyze->add_option("input", input, "input file, or - for stdin");
    analyze->add_option("--format", format, "graph6 or planar_code")
        ->check(CLI::IsMember({"graph6", "planar_code"}));
    analyze->add_option("--embedding", embedding,
                        "all (enumerate genus-0 embeddings) or given (planar_code only)")
        ->check(CLI::IsMember({"all", "given"}));
    analyze->add_option("--budget", budget, "search budget in backtrack nodes");

    std::string color_input = "-";
    std::string color_format = "graph6";
    int k = 3;
    std::string strategy = "auto";
    auto* color = app.add_subcommand("color", "emit coloring records as JSON lines");
    color->add_option("input", color_input, "input file, or - for stdin");
    color->add_option("--format", color_format, "graph6 or planar_code")
        ->check(CLI::IsMember({"graph6", "planar_code"}));
    color->add_option("--k", k, "palette size")->check(CLI::PositiveNumber);
    color->add_option("--strategy", strategy, "peel, exact, or auto")
        ->check(CLI::IsMember({"peel", "exact", "auto"}));
    color->add_option("--budget", budget, "search budget in backtrack nodes");

    int theorem = 0;
    int max_n = 0;
    auto* verify = app.add_subcommand("verify-theorems", "run an exhaustive verification sweep");
    verify->add_option("--theorem", theorem, "2, 4, or 6")
        ->required()
        ->check(CLI::IsMember({2, 4, 6}));
    verify->add_option("--max-n", max_n, "largest vertex count to enumerate");
    verify->add_option("--budget", budget, "search budget in backtrack nodes");

    int m = 0;
    long long bounds_n = 10;
    auto* bounds = app.add_subcommand("bounds", "print the exact bound table for m and n");
    bounds->add_option("--m", m, "minimum non-triangular face length (>= 7)")->required();
    bounds->add_option("--n", bounds_n, "vertex count to evaluate at");

    int enum_max_n = 8;
    bool all_graphs = false;
    bool planar = false;
    int min_degree = -1;
    std::vector<int> forbid;
    auto* enumerate = app.add_subcommand("enumerate", "emit a canonical graph6 corpus");
    enumerate->add_option("--max-n", enum_max_n, "largest vertex count (cap 10)");
    enumerate->add_flag("--all", all_graphs, "include disconnected graphs");
    enumerate->add_flag("--planar", planar, "keep only planar graphs");
    enumerate->add_option("--min-degree", min_degree, "minimum degree filter");
    enumerate->add_option("--forbid-cycles", forbid, "cycle length window LO HI to exclude")
        ->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (app.got_subcommand(analyze))
            return cmd_analyze(input, format, embedding, budget);
        if (app.got_subcommand(color))
            return cmd_color(color_input, color_format, k, strategy, budget);
        if (app.got_subcommand(verify)) {
            if (max_n == 0)
                max_n = theorem == 4 ? 7 : theorem == 2 ? 9 : 10;
            return cmd_verify(theorem, max_n, budget);
        }
        if (app.got_subcommand(bounds))
            return cmd_bounds(m, bounds_n);
        if (app.got_subcommand(enumerate))
            return cmd_enumerate(enum_max_n, all_graphs, min_degree, forbid, planar);
    } catch (const std::exception& e) {
        std::cerr << "planecount: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
