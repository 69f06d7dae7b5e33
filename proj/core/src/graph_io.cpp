#include "plumb/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace plumb {

namespace {

struct Token {
    std::string_view text;
    int col = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;  // comment to end of line
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

std::optional<std::int64_t> parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) return std::nullopt;
    return value;
}

// "genus=<int>" -> int, reporting the key it expected.
std::optional<std::int64_t> parse_keyed_int(std::string_view token, std::string_view key) {
    if (token.size() <= key.size() + 1) return std::nullopt;
    if (token.substr(0, key.size()) != key || token[key.size()] != '=') return std::nullopt;
    return parse_int(token.substr(key.size() + 1));
}

void line_col_of_offset(std::string_view text, std::size_t offset, int& line, int& col) {
    line = 1;
    col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
}

PlumbingGraph build_graph(std::vector<Vertex> vertices,
                          const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                          std::vector<Diagnostic>& diagnostics) {
    if (!diagnostics.empty()) {
        throw ParseError(std::move(diagnostics));
    }
    return PlumbingGraph(std::move(vertices), edges);
}

PlumbingGraph parse_dsl(std::string_view text) {
    std::vector<Diagnostic> diagnostics;
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::unordered_map<std::string, std::size_t> index;

    auto fail = [&](Diagnostic::Code code, int line, int col, std::string message) {
        diagnostics.push_back({code, line, col, std::move(message)});
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;

        const Token& head = tokens[0];
        if (head.text == "vertex") {
            if (tokens.size() != 4) {
                fail(Diagnostic::Code::malformed_syntax, line_no, head.col,
                     "expected: vertex <id> genus=<int> euler=<int>");
                continue;
            }
            std::string id(tokens[1].text);
            auto genus = parse_keyed_int(tokens[2].text, "genus");
            auto euler = parse_keyed_int(tokens[3].text, "euler");
            if (!genus) {
                fail(Diagnostic::Code::malformed_syntax, line_no, tokens[2].col, "expected genus=<int>");
                continue;
            }
            if (!euler) {
                fail(Diagnostic::Code::malformed_syntax, line_no, tokens[3].col, "expected euler=<int>");
                continue;
            }
            if (*genus < 0) {
                fail(Diagnostic::Code::negative_genus, line_no, tokens[2].col,
                     "genus of vertex '" + id + "' is negative");
                continue;
            }
            if (index.contains(id)) {
                fail(Diagnostic::Code::duplicate_id, line_no, tokens[1].col,
                     "vertex id '" + id + "' already declared");
                continue;
            }
            index.emplace(id, vertices.size());
            vertices.push_back({std::move(id), static_cast<int>(*genus), *euler});
        } else if (head.text == "edge") {
            if (tokens.size() != 3) {
                fail(Diagnostic::Code::malformed_syntax, line_no, head.col, "expected: edge <id> <id>");
                continue;
            }
            std::string a(tokens[1].text);
            std::string b(tokens[2].text);
            auto ia = index.find(a);
            auto ib = index.find(b);
            if (ia == index.end()) {
                fail(Diagnostic::Code::dangling_endpoint, line_no, tokens[1].col,
                     "edge endpoint '" + a + "' is not a declared vertex");
                continue;
            }
            if (ib == index.end()) {
                fail(Diagnostic::Code::dangling_endpoint, line_no, tokens[2].col,
                     "edge endpoint '" + b + "' is not a declared vertex");
                continue;
            }
            if (ia->second == ib->second) {
                fail(Diagnostic::Code::self_loop, line_no, tokens[1].col,
                     "self-loop on vertex '" + a + "'");
                continue;
            }
            edges.emplace_back(ia->second, ib->second);
        } else {
            fail(Diagnostic::Code::malformed_syntax, line_no, head.col,
                 "unknown directive '" + std::string(head.text) + "'");
        }
    }

    return build_graph(std::move(vertices), edges, diagnostics);
}

PlumbingGraph parse_json(std::string_view text) {
    std::vector<Diagnostic> diagnostics;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 0, col = 0;
        line_col_of_offset(text, e.byte > 0 ? e.byte - 1 : 0, line, col);
        diagnostics.push_back({Diagnostic::Code::malformed_syntax, line, col, e.what()});
        throw ParseError(std::move(diagnostics));
    }

    auto fail = [&](Diagnostic::Code code, std::string message) {
        diagnostics.push_back({code, 0, 0, std::move(message)});
    };

    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array() ||
        !doc.contains("edges") || !doc["edges"].is_array()) {
        fail(Diagnostic::Code::malformed_syntax,
             "expected an object with \"vertices\" and \"edges\" arrays");
        throw ParseError(std::move(diagnostics));
    }

    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::unordered_map<std::string, std::size_t> index;

    for (const auto& item : doc["vertices"]) {
        if (!item.is_object() || !item.contains("id") || !item["id"].is_string() ||
            !item.contains("genus") || !item["genus"].is_number_integer() ||
            !item.contains("euler") || !item["euler"].is_number_integer()) {
            fail(Diagnostic::Code::malformed_syntax,
                 "vertex entries need string \"id\" and integer \"genus\", \"euler\"");
            continue;
        }
        std::string id = item["id"].get<std::string>();
        std::int64_t genus = item["genus"].get<std::int64_t>();
        std::int64_t euler = item["euler"].get<std::int64_t>();
        if (!is_token(id)) {
            fail(Diagnostic::Code::malformed_syntax,
                 "vertex id '" + id + "' is not a token (nonempty, no whitespace, no '#')");
            continue;
        }
        if (genus < 0) {
            fail(Diagnostic::Code::negative_genus, "genus of vertex '" + id + "' is negative");
            continue;
        }
        if (index.contains(id)) {
            fail(Diagnostic::Code::duplicate_id, "vertex id '" + id + "' already declared");
            continue;
        }
        index.emplace(id, vertices.size());
        vertices.push_back({std::move(id), static_cast<int>(genus), euler});
    }

    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string()) {
            fail(Diagnostic::Code::malformed_syntax, "edge entries are two-element string arrays");
            continue;
        }
        std::string a = item[0].get<std::string>();
        std::string b = item[1].get<std::string>();
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end()) {
            fail(Diagnostic::Code::dangling_endpoint, "edge endpoint '" + a + "' is not a declared vertex");
            continue;
        }
        if (ib == index.end()) {
            fail(Diagnostic::Code::dangling_endpoint, "edge endpoint '" + b + "' is not a declared vertex");
            continue;
        }
        if (ia->second == ib->second) {
            fail(Diagnostic::Code::self_loop, "self-loop on vertex '" + a + "'");
            continue;
        }
        edges.emplace_back(ia->second, ib->second);
    }

    return build_graph(std::move(vertices), edges, diagnostics);
}

} // namespace

PlumbingGraph parse_graph(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_json(text);
        break;
    }
    return parse_dsl(text);
}

std::string emit_graph(const PlumbingGraph& g, GraphFormat format) {
    if (format == GraphFormat::dsl) {
        std::ostringstream os;
        for (const Vertex& v : g.vertices()) {
            os << "vertex " << v.id << " genus=" << v.genus << " euler=" << v.euler << '\n';
        }
        for (const auto& [a, b] : g.edges()) {
            os << "edge " << g.vertex(a).id << ' ' << g.vertex(b).id << '\n';
        }
        return os.str();
    }

    nlohmann::json doc;
    doc["vertices"] = nlohmann::json::array();
    for (const Vertex& v : g.vertices()) {
        doc["vertices"].push_back({{"id", v.id}, {"genus", v.genus}, {"euler", v.euler}});
    }
    doc["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : g.edges()) {
        doc["edges"].push_back({g.vertex(a).id, g.vertex(b).id});
    }
    return doc.dump(2) + "\n";
}

} // namespace plumb
