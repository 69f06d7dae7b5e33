// plumb: command-line front end for the plumbing-graph analyzer.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 precondition violation (e.g. a cycle request on an indefinite form).
// Diagnostics go to stderr, payloads to stdout; '-' names stdin.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "plumb/cycles.hpp"
#include "plumb/graph.hpp"
#include "plumb/graph_io.hpp"
#include "plumb/lattice.hpp"
#include "plumb/seifert.hpp"
#include "plumb/verdicts.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw plumb::ParseError({{plumb::Diagnostic::Code::malformed_syntax, 0, 0,
                                      "cannot open file: " + path}});
        }
        buffer << in.rdbuf();
    }
    return buffer.str();
}

plumb::PlumbingGraph load_graph(const std::string& path) {
    return plumb::parse_graph(read_input(path));
}

// Graphs fed to whole-link subcommands must be clean; report every
// validation finding and refuse otherwise.
void require_valid(const plumb::PlumbingGraph& g) {
    std::vector<plumb::Diagnostic> diagnostics = plumb::validate(g);
    if (!diagnostics.empty()) {
        throw plumb::ParseError(std::move(diagnostics));
    }
}

nlohmann::json graph_json(const plumb::PlumbingGraph& g) {
    return nlohmann::json::parse(plumb::emit_graph(g, plumb::GraphFormat::json));
}

bool want_json(const std::string& format) { return format == "json"; }

void emit_matrix(const plumb::PlumbingGraph& g, const std::string& format) {
    plumb::IntMatrix m = plumb::intersection_matrix(g);
    if (want_json(format)) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t j = 0; j < m.size(); ++j) {
                row.push_back(m.at(i, j).convert_to<std::int64_t>());
            }
            rows.push_back(row);
        }
        std::cout << nlohmann::json{{"matrix", rows}}.dump(2) << '\n';
    } else {
        std::cout << m.to_string();
    }
}

void emit_cycle(const plumb::PlumbingGraph& g, const std::string& format) {
    plumb::Divisor z = plumb::fundamental_cycle(g);
    if (want_json(format)) {
        std::cout << nlohmann::json{{"cycle", z.coefficients}}.dump(2) << '\n';
    } else {
        std::cout << plumb::to_string(z) << '\n';
    }
}

void emit_seifert(const plumb::PlumbingGraph& g, const std::string& format) {
    plumb::SeifertData data = plumb::seifert_data(g);
    if (want_json(format)) {
        nlohmann::json fibers = nlohmann::json::array();
        for (const plumb::Rational& f : data.exceptional()) {
            fibers.push_back({{"beta", plumb::rational_num(f).convert_to<std::int64_t>()},
                              {"alpha", plumb::rational_den(f).convert_to<std::int64_t>()}});
        }
        std::cout << nlohmann::json{{"e0", data.e0()},
                                    {"base_genus", data.base_genus()},
                                    {"fibers", fibers}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << plumb::to_string(data) << '\n';
    }
}

void emit_report(const plumb::VerdictReport& report, const std::string& format) {
    std::cout << plumb::report_render(
        report, want_json(format) ? plumb::ReportFormat::json : plumb::ReportFormat::text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plumb: exact analyzer for weighted plumbing graphs of singularity links"};
    app.require_subcommand(1);

    std::string analyze_file, matrix_file, cycle_file, seifert_file;
    std::string analyze_format = "text", family_format = "text", enum_format = "text";
    std::string matrix_format = "text", cycle_format = "text", seifert_format = "text";
    bool verbose = false;
    app.add_flag("--verbose,-v", verbose, "progress notes on stderr");

    auto add_format = [](CLI::App* cmd, std::string& target) {
        cmd->add_option("--format", target, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full verdict report for a graph file");
    analyze->add_option("file", analyze_file, "graph document, '-' for stdin")->required();
    add_format(analyze, analyze_format);

    CLI::App* family = app.add_subcommand("family", "generate a named family member");
    std::string family_name;
    int family_p = 1;
    bool family_emit = false, family_analyze = false;
    family->add_option("name", family_name, "family name (yp)")->required();
    family->add_option("--p", family_p, "family parameter p >= 1")->required();
    family->add_flag("--emit", family_emit, "emit the graph document (default)");
    family->add_flag("--analyze", family_analyze, "emit the verdict report instead");
    add_format(family, family_format);

    CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "search generated links by predicate");
    plumb::SearchSpec spec;
    std::string shapes = "star";
    enumerate_cmd->add_option("--max-vertices", spec.max_vertices, "vertex budget")->required();
    enumerate_cmd->add_option("--euler-min", spec.euler_min, "lowest Euler weight")->capture_default_str();
    enumerate_cmd->add_option("--euler-max", spec.euler_max, "highest Euler weight")->capture_default_str();
    enumerate_cmd->add_option("--predicate", spec.predicate, "predicate name")->capture_default_str();
    enumerate_cmd->add_option("--shapes", shapes, "comma list of star,chain")->capture_default_str();
    enumerate_cmd->add_option("--cap", spec.cap, "result cap")->capture_default_str();
    add_format(enumerate_cmd, enum_format);

    CLI::App* matrix = app.add_subcommand("matrix", "intersection matrix of a graph file");
    matrix->add_option("file", matrix_file, "graph document, '-' for stdin")->required();
    add_format(matrix, matrix_format);

    CLI::App* cycle = app.add_subcommand("cycle", "fundamental cycle of a graph file");
    cycle->add_option("file", cycle_file, "graph document, '-' for stdin")->required();
    add_format(cycle, cycle_format);

    CLI::App* seifert = app.add_subcommand("seifert", "Seifert invariants of a graph file");
    seifert->add_option("file", seifert_file, "graph document, '-' for stdin")->required();
    add_format(seifert, seifert_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(analyze)) {
            plumb::PlumbingGraph g = load_graph(analyze_file);
            require_valid(g);
            emit_report(plumb::analyze(g), analyze_format);
        } else if (app.got_subcommand(family)) {
            if (family_name != "yp") {
                std::cerr << "unknown family '" << family_name << "' (expected: yp)\n";
                return kExitUsage;
            }
            if (family_emit && family_analyze) {
                std::cerr << "--emit and --analyze are mutually exclusive\n";
                return kExitUsage;
            }
            plumb::PlumbingGraph g = plumb::make_yp(family_p);
            if (family_analyze) {
                emit_report(plumb::analyze(g), family_format);
            } else {
                std::cout << plumb::emit_graph(
                    g, want_json(family_format) ? plumb::GraphFormat::json : plumb::GraphFormat::dsl);
            }
        } else if (app.got_subcommand(enumerate_cmd)) {
            spec.stars = shapes.find("star") != std::string::npos;
            spec.chains = shapes.find("chain") != std::string::npos;
            if (!spec.stars && !spec.chains) {
                std::cerr << "--shapes needs at least one of star,chain\n";
                return kExitUsage;
            }
            plumb::SearchResult result = plumb::enumerate(spec);
            if (verbose) {
                std::cerr << "examined " << result.generated << " graphs, " << result.hits.size()
                          << " hits" << (result.truncated ? " (truncated)" : "") << '\n';
            }
            if (want_json(enum_format)) {
                nlohmann::json hits = nlohmann::json::array();
                for (const auto& hit : result.hits) {
                    hits.push_back({{"encoding", hit.encoding},
                                    {"graph", graph_json(hit.graph)},
                                    {"report", nlohmann::json::parse(plumb::report_render(
                                                   hit.report, plumb::ReportFormat::json))}});
                }
                std::cout << nlohmann::json{{"schema_version", 1},
                                            {"generated", result.generated},
                                            {"truncated", result.truncated},
                                            {"hits", hits}}
                                 .dump(2)
                          << '\n';
            } else {
                for (const auto& hit : result.hits) {
                    std::cout << hit.encoding << '\n';
                }
                if (result.truncated) {
                    std::cerr << "note: results truncated at cap " << spec.cap << '\n';
                }
            }
        } else if (app.got_subcommand(matrix)) {
            plumb::PlumbingGraph g = load_graph(matrix_file);
            require_valid(g);
            emit_matrix(g, matrix_format);
        } else if (app.got_subcommand(cycle)) {
            plumb::PlumbingGraph g = load_graph(cycle_file);
            require_valid(g);
            emit_cycle(g, cycle_format);
        } else if (app.got_subcommand(seifert)) {
            plumb::PlumbingGraph g = load_graph(seifert_file);
            require_valid(g);
            emit_seifert(g, seifert_format);
        }
    } catch (const plumb::ParseError& e) {
        for (const plumb::Diagnostic& d : e.diagnostics()) {
            std::cerr << plumb::render(d) << '\n';
        }
        return kExitParse;
    } catch (const plumb::PreconditionError& e) {
        std::cerr << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kExitParse;
    }
    return 0;
}
