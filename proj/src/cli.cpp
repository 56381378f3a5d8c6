// cli.cpp
// Subcommand front end over the library. All output is deterministic for a
// fixed invocation, including under --jobs parallelism; --json swaps the
// human tables for versioned machine-readable records (schema: 1).

#include "starcrit/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starcrit/coloring.hpp"
#include "starcrit/criticality.hpp"
#include "starcrit/enumerate.hpp"
#include "starcrit/families.hpp"
#include "starcrit/graph.hpp"
#include "starcrit/patterns.hpp"

namespace starcrit::cli {

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_claim_failed = 1;
constexpr int exit_usage = 2;

struct GraphSource {
    std::string graph6;
    std::string input_file;
    std::string family;
    int family_n = 0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph as a graph6 string");
        cmd->add_option("--input", input_file, "file with one graph (edge-list \"n m\" format or graph6); \"-\" reads stdin");
        cmd->add_option("--family", family, "named family: horn, double-horn, cone-c5, complete, path, cycle, star, independent");
        cmd->add_option("--n", family_n, "order for --family");
    }

    Graph load() const {
        int sources = (!graph6.empty() ? 1 : 0) + (!input_file.empty() ? 1 : 0) + (!family.empty() ? 1 : 0);
        if (sources != 1)
            throw CLI::ValidationError("graph input", "exactly one of --graph6, --input, --family is required");
        if (!graph6.empty()) return Graph::from_graph6(graph6);
        if (!family.empty()) {
            auto fam = parse_family(family);
            if (!fam) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
            if (family_n <= 0) throw CLI::ValidationError("--n", "--family requires --n >= 1");
            return make_family(*fam, family_n);
        }
        std::string text = read_all(input_file);
        std::size_t pos = text.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) throw std::invalid_argument("input file is empty");
        if (std::isdigit(static_cast<unsigned char>(text[pos]))) return Graph::from_edge_list_text(text);
        std::size_t end = text.find_first_of("\r\n", pos);
        return Graph::from_graph6(std::string_view(text).substr(pos, end == std::string::npos ? end : end - pos));
    }

    static std::string read_all(const std::string& path) {
        if (path == "-") {
            std::ostringstream os;
            os << std::cin.rdbuf();
            return os.str();
        }
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
};

std::string format_edge(const Edge& e, bool one_based) {
    int off = one_based ? 1 : 0;
    return "(" + std::to_string(e.u + off) + "," + std::to_string(e.v + off) + ")";
}

std::string format_colors(const Coloring& c) {
    std::string out;
    for (std::size_t i = 0; i < c.colors.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(c.colors[i]);
    }
    return out;
}

ordered_json json_header(const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (g.vertex_count() <= 62) j["graph6"] = g.to_graph6();
    return j;
}

ordered_json witness_json(const PatternWitness& w) {
    ordered_json j;
    j["kind"] = pattern_name(w.kind);
    j["vertices"] = w.vertices;
    return j;
}

Coloring parse_colors(const std::string& text, int n) {
    std::string cleaned = text;
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream is(cleaned);
    std::vector<int> colors;
    int x;
    while (is >> x) colors.push_back(x);
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " colors, got " + std::to_string(colors.size()));
    return Coloring::of(std::move(colors));
}

// ---------------------------------------------------------------------------

int cmd_solve(bool star, const GraphSource& src, bool json, bool self_check, std::ostream& out) {
    Graph g = src.load();
    ColoringResult r = star ? star_chromatic_number(g) : chromatic_number(g);
    bool valid = star ? is_star_coloring(g, r.coloring) : is_proper(g, r.coloring);
    if (!valid) throw std::logic_error("solver produced an invalid certificate");
    if (json) {
        ordered_json j = json_header(star ? "chis" : "chi");
        j.update(graph_json(g));
        j[star ? "chi_s" : "chi"] = r.k;
        j["coloring"] = r.coloring.colors;
        j["certificate_valid"] = valid;
        out << j.dump() << '\n';
    } else {
        out << r.k << '\n';
        out << "coloring: " << format_colors(r.coloring) << '\n';
        if (self_check) out << "self-check: certificate valid\n";
    }
    return exit_ok;
}

int cmd_check_coloring(const GraphSource& src, const std::string& colors_text, bool json, bool one_based, std::ostream& out) {
    Graph g = src.load();
    Coloring c = parse_colors(colors_text, g.vertex_count());
    bool proper = is_proper(g, c);
    std::optional<BicoloredP4Witness> witness;
    if (proper) witness = find_bicolored_p4(g, c);
    bool star = proper && !witness;
    if (json) {
        ordered_json j = json_header("check-coloring");
        j.update(graph_json(g));
        j["colors"] = c.colors;
        j["proper"] = proper;
        j["star"] = star;
        if (witness) {
            j["bicolored_p4"] = {{"path", witness->path}, {"colors", {witness->color_ac, witness->color_bd}}};
        }
        out << j.dump() << '\n';
    } else {
        out << "proper: " << (proper ? "yes" : "no") << '\n';
        out << "star: " << (star ? "yes" : "no") << '\n';
        if (witness) {
            int off = one_based ? 1 : 0;
            out << "bicolored P4: (" << witness->path[0] + off << "," << witness->path[1] + off << ","
                << witness->path[2] + off << "," << witness->path[3] + off << ") colors " << witness->color_ac
                << "," << witness->color_bd << '\n';
        }
    }
    return star ? exit_ok : exit_claim_failed;
}

int cmd_detect(const GraphSource& src, const std::string& pattern, bool json, bool one_based, std::ostream& out) {
    Graph g = src.load();

    // boolean detectors without witnesses
    if (pattern == "p4-subgraph" || pattern == "star-graph") {
        bool found = pattern == "p4-subgraph" ? contains_p4_subgraph(g) : is_star_graph(g);
        if (json) {
            ordered_json j = json_header("detect");
            j.update(graph_json(g));
            j["pattern"] = pattern;
            j["found"] = found;
            out << j.dump() << '\n';
        } else {
            out << pattern << ": " << (found ? "yes" : "no") << '\n';
        }
        return found ? exit_ok : exit_claim_failed;
    }

    std::optional<PatternKind> kind;
    if (pattern == "i3") kind = PatternKind::I3;
    else if (pattern == "2k2") kind = PatternKind::TwoK2;
    else if (pattern == "i4") kind = PatternKind::I4;
    else if (pattern == "2k2+k1" || pattern == "2k2k1") kind = PatternKind::TwoK2PlusK1;
    else if (pattern == "p3+p2" || pattern == "p3p2") kind = PatternKind::P3PlusP2;
    if (!kind)
        throw CLI::ValidationError("--pattern", "unknown pattern '" + pattern +
                                   "' (use i3, 2k2, i4, 2k2+k1, p3+p2, p4-subgraph, star-graph)");

    std::optional<PatternWitness> w = find_induced(g, *kind);
    if (json) {
        ordered_json j = json_header("detect");
        j.update(graph_json(g));
        j["pattern"] = pattern_name(*kind);
        j["found"] = w.has_value();
        if (w) j["witness"] = witness_json(*w);
        out << j.dump() << '\n';
    } else {
        if (w)
            out << "witness: " << format_witness(*w, one_based) << '\n';
        else
            out << "no induced " << pattern_name(*kind) << '\n';
    }
    return w ? exit_ok : exit_claim_failed;
}

int cmd_critical(const GraphSource& src, int k_option, bool json, bool one_based, bool self_check, std::ostream& out) {
    Graph g = src.load();
    int k = k_option > 0 ? k_option : star_chromatic_number(g).k;
    CriticalityReport r = is_k_critical_direct(g, k);
    if (self_check) {
        // re-derive each per-edge value through the uncapped solver
        for (const auto& [e, sub] : r.per_edge)
            if (std::min(star_chromatic_number(g.delete_edge(e)).k, r.chi_s) != sub)
                throw std::logic_error("per-edge chi_s self-check failed on " + format_edge(e, false));
    }
    if (json) {
        ordered_json j = json_header("critical");
        j.update(graph_json(g));
        j["k"] = r.k_claimed;
        j["chi_s"] = r.chi_s;
        j["premise_holds"] = r.premise_holds;
        ordered_json edges = ordered_json::array();
        for (const auto& [e, sub] : r.per_edge)
            edges.push_back({{"edge", {e.u, e.v}}, {"chi_s_minus_e", sub}});
        j["per_edge"] = edges;
        j["is_critical"] = r.is_critical;
        if (r.failing_edge) j["failing_edge"] = {r.failing_edge->u, r.failing_edge->v};
        out << j.dump() << '\n';
    } else {
        out << "chi_s = " << r.chi_s << '\n';
        if (!r.premise_holds) out << "premise fails: chi_s != " << r.k_claimed << '\n';
        for (const auto& [e, sub] : r.per_edge)
            out << "edge " << format_edge(e, one_based) << ": chi_s(G-e) = " << sub << '\n';
        out << "critical: " << (r.is_critical ? "yes" : "no") << '\n';
        if (r.failing_edge) out << "failing edge: " << format_edge(*r.failing_edge, one_based) << '\n';
        if (self_check) out << "self-check: per-edge values confirmed\n";
    }
    return r.is_critical ? exit_ok : exit_claim_failed;
}

int cmd_classify(const GraphSource& src, bool json, std::ostream& out) {
    Graph g = src.load();
    CriticalityLabel label = classify_critical(g);
    if (json) {
        ordered_json j = json_header("classify");
        j.update(graph_json(g));
        j["label"] = label.text();
        j["chi_s"] = label.chi_s;
        out << j.dump() << '\n';
    } else {
        out << label.text() << '\n';
    }
    return exit_ok;
}

int cmd_gen(const std::string& family, int n, const std::string& format, bool json, std::ostream& out) {
    auto fam = parse_family(family);
    if (!fam) throw CLI::ValidationError("--family", "unknown family '" + family + "'");
    Graph g = make_family(*fam, n);
    if (json) {
        ordered_json j = json_header("gen");
        j["family"] = family_name(*fam);
        j.update(graph_json(g));
        out << j.dump() << '\n';
    } else if (format == "edgelist") {
        out << g.to_edge_list_text();
    } else {
        out << g.to_graph6() << '\n';
    }
    return exit_ok;
}

int cmd_enumerate(int n, bool connected, const std::string& format, bool json, std::ostream& out) {
    const std::vector<Graph>& pool = connected ? enumerate_connected(n) : enumerate_all(n);
    if (json) {
        ordered_json j = json_header("enumerate");
        j["n"] = n;
        j["connected"] = connected;
        j["count"] = pool.size();
        ordered_json graphs = ordered_json::array();
        for (const Graph& g : pool) graphs.push_back(g.to_graph6());
        j["graphs"] = graphs;
        out << j.dump() << '\n';
    } else if (format == "edgelist") {
        for (const Graph& g : pool) out << g.to_edge_list_text() << '\n';
    } else {
        for (const Graph& g : pool) out << g.to_graph6() << '\n';
    }
    return exit_ok;
}

int cmd_verify(const std::string& claim_name, int n, int jobs, const std::string& input_file,
               bool json, std::ostream& out) {
    std::optional<Claim> claim = parse_claim(claim_name);
    if (!claim) {
        std::string known;
        for (const std::string& id : claim_ids()) known += (known.empty() ? "" : ", ") + id;
        throw CLI::ValidationError("--claim", "unknown claim '" + claim_name + "' (known: " + known + ")");
    }

    VerificationRun run;
    if (!input_file.empty()) {
        std::vector<Graph> pool;
        std::istringstream lines(GraphSource::read_all(input_file));
        std::string line;
        while (std::getline(lines, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (line.empty() || line[0] == '>') continue;  // geng-style headers
            pool.push_back(Graph::from_graph6(line));
        }
        run = verify_claim_over(*claim, n, pool, jobs);
    } else {
        run = verify_claim(*claim, n, jobs);
    }

    if (json) {
        ordered_json j = json_header("verify");
        j["claim"] = run.claim;
        j["n"] = run.n;
        j["graphs_examined"] = run.graphs_examined;
        j["counterexamples"] = run.counterexamples;
        j["holds"] = run.verified();
        out << j.dump() << '\n';
    } else {
        std::string population = *claim == Claim::ThreeCritical
                                     ? "connected graphs of order <= " + std::to_string(n)
                                     : "connected graphs of order " + std::to_string(n);
        out << run.counterexamples.size() << " counterexamples / " << run.graphs_examined << " "
            << population << " examined (claim " << run.claim << ")\n";
        for (const std::string& g6 : run.counterexamples) out << "counterexample: " << g6 << '\n';
    }
    return run.verified() ? exit_ok : exit_claim_failed;
}

int cmd_audit(const GraphSource& src, const std::string& kind_name, bool json, std::ostream& out) {
    Graph g = src.load();
    BoundKind kind;
    if (kind_name == "n1") kind = BoundKind::N1Critical;
    else if (kind_name == "n2") kind = BoundKind::N2Critical;
    else throw CLI::ValidationError("--kind", "unknown bound kind '" + kind_name + "' (use n1 or n2)");

    BoundsReport bounds = audit_bounds(g, kind);
    ComplementConditionsReport comp = audit_complement_conditions(g);
    if (json) {
        ordered_json j = json_header("audit");
        j.update(graph_json(g));
        j["bound_kind"] = kind_name;
        j["bound_name"] = bounds.bound_name;
        j["lower_ok"] = bounds.lower_ok;
        j["upper_ok"] = bounds.upper_ok;
        j["lower"] = bounds.lower_text;
        j["upper"] = bounds.upper_text;
        j["complement"] = {{"m", comp.complement_m},
                           {"c3c4_free", comp.c3c4_free},
                           {"c3c4_edge_bound_ok", comp.c3c4_edge_bound_ok},
                           {"k4_free", comp.k4_free},
                           {"turan_edge_bound_ok", comp.turan_edge_bound_ok}};
        out << j.dump() << '\n';
    } else {
        out << "n = " << bounds.n << ", m = " << bounds.m << " (" << bounds.bound_name << " bounds)\n";
        out << "lower bound " << bounds.lower_text << ": " << (bounds.lower_ok ? "satisfied" : "violated") << '\n';
        out << "upper bound " << bounds.upper_text << ": " << (bounds.upper_ok ? "satisfied" : "violated") << '\n';
        out << "complement: m = " << comp.complement_m
            << ", (C3,C4)-free: " << (comp.c3c4_free ? "yes" : "no")
            << ", edge bound 4m^2 <= n^2(n-1): " << (comp.c3c4_edge_bound_ok ? "yes" : "no")
            << ", K4-free: " << (comp.k4_free ? "yes" : "no")
            << ", edge bound 3m <= n^2: " << (comp.turan_edge_bound_ok ? "yes" : "no") << '\n';
    }
    return bounds.satisfied() ? exit_ok : exit_claim_failed;
}

int cmd_convert(const GraphSource& src, const std::string& to, std::ostream& out) {
    Graph g = src.load();
    if (to == "graph6")
        out << g.to_graph6() << '\n';
    else if (to == "edgelist")
        out << g.to_edge_list_text();
    else
        throw CLI::ValidationError("--to", "unknown format '" + to + "' (use graph6 or edgelist)");
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"starcrit: exact star-coloring toolkit for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();  // --json etc. may appear after the subcommand

    bool json = false, one_based = false, self_check = false;
    app.add_flag("--json", json, "machine-readable output (schema: 1)");
    app.add_flag("--one-based", one_based, "print vertices 1-based (default 0-based)");
    app.add_flag("--self-check", self_check, "re-validate printed certificates through the library checkers");

    GraphSource chis_src, chi_src, check_src, detect_src, crit_src, classify_src, audit_src, convert_src;

    CLI::App* chis = app.add_subcommand("chis", "star chromatic number with certificate");
    chis_src.add_options(chis);

    CLI::App* chi = app.add_subcommand("chi", "proper chromatic number with certificate");
    chi_src.add_options(chi);

    std::string colors_text;
    CLI::App* check = app.add_subcommand("check-coloring", "validate a coloring as proper / star");
    check_src.add_options(check);
    check->add_option("--colors", colors_text, "comma- or space-separated colors, one per vertex")->required();

    std::string pattern;
    CLI::App* detect = app.add_subcommand("detect", "find forbidden induced patterns");
    detect_src.add_options(detect);
    detect->add_option("--pattern", pattern, "i3, 2k2, i4, 2k2+k1, p3+p2, p4-subgraph, star-graph")->required();

    int crit_k = 0;
    CLI::App* critical = app.add_subcommand("critical", "decide k-criticality directly (per-edge chi_s)");
    crit_src.add_options(critical);
    critical->add_option("--k", crit_k, "claimed k (default: chi_s of the graph)");

    CLI::App* classify = app.add_subcommand("classify", "criticality label (3-critical, (n-1)-critical, ...)");
    classify_src.add_options(classify);

    std::string gen_family, gen_format = "graph6";
    int gen_n = 0;
    CLI::App* gen = app.add_subcommand("gen", "generate a named family member");
    gen->add_option("--family", gen_family)->required();
    gen->add_option("--n", gen_n)->required();
    gen->add_option("--format", gen_format, "graph6 (default) or edgelist");

    int enum_n = 0;
    bool enum_connected = false;
    std::string enum_format = "graph6";
    CLI::App* enumerate = app.add_subcommand("enumerate", "non-isomorphic graphs of order n, one per line");
    enumerate->add_option("--n", enum_n)->required();
    enumerate->add_flag("--connected", enum_connected, "connected graphs only");
    enumerate->add_option("--format", enum_format, "graph6 (default) or edgelist");

    std::string verify_claim_name, verify_input;
    int verify_n = 0, verify_jobs = 1;
    CLI::App* verify = app.add_subcommand("verify", "check a claim over all small graphs");
    verify->add_option("--claim", verify_claim_name)->required();
    verify->add_option("--n", verify_n)->required();
    verify->add_option("--jobs", verify_jobs, "worker count (output is identical for any value)");
    verify->add_option("--input", verify_input, "graph6 file to use instead of internal enumeration");

    std::string audit_kind = "n1";
    CLI::App* audit = app.add_subcommand("audit", "edge-bound and complement-condition report");
    audit_src.add_options(audit);
    audit->add_option("--kind", audit_kind, "n1 or n2 (default n1)");

    std::string convert_to = "graph6";
    CLI::App* convert = app.add_subcommand("convert", "convert between graph6 and edge-list");
    convert_src.add_options(convert);
    convert->add_option("--to", convert_to, "graph6 (default) or edgelist");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (chis->parsed()) return cmd_solve(true, chis_src, json, self_check, out);
        if (chi->parsed()) return cmd_solve(false, chi_src, json, self_check, out);
        if (check->parsed()) return cmd_check_coloring(check_src, colors_text, json, one_based, out);
        if (detect->parsed()) return cmd_detect(detect_src, pattern, json, one_based, out);
        if (critical->parsed()) return cmd_critical(crit_src, crit_k, json, one_based, self_check, out);
        if (classify->parsed()) return cmd_classify(classify_src, json, out);
        if (gen->parsed()) return cmd_gen(gen_family, gen_n, gen_format, json, out);
        if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_connected, enum_format, json, out);
        if (verify->parsed()) return cmd_verify(verify_claim_name, verify_n, verify_jobs, verify_input, json, out);
        if (audit->parsed()) return cmd_audit(audit_src, audit_kind, json, out);
        if (convert->parsed()) return cmd_convert(convert_src, convert_to, out);
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Graph6Error& e) {
        err << "graph6 error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_usage;
    }
    err << "error: no subcommand\n";
    return exit_usage;
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, std::cout, std::cerr);
}

}  // namespace starcrit::cli
