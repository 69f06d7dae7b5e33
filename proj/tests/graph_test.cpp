#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "plumb/graph.hpp"
#include "plumb/graph_io.hpp"
#include "support/generators.hpp"
#include "support/schema_lite.hpp"

using namespace plumb;

namespace {

bool has_code(const ParseError& e, Diagnostic::Code code) {
    return std::any_of(e.diagnostics().begin(), e.diagnostics().end(),
                       [code](const Diagnostic& d) { return d.code == code; });
}

const Diagnostic& first_with(const ParseError& e, Diagnostic::Code code) {
    for (const Diagnostic& d : e.diagnostics()) {
        if (d.code == code) return d;
    }
    throw std::logic_error("diagnostic code not present");
}

} // namespace

TEST_SUITE("graph") {

TEST_CASE("smallest well-formed input parses") {
    PlumbingGraph g = parse_graph("vertex a genus=0 euler=-2");
    REQUIRE(g.vertex_count() == 1);
    CHECK(g.vertex(0).id == "a");
    CHECK(g.vertex(0).genus == 0);
    CHECK(g.vertex(0).euler == -2);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("parser reports distinct diagnostics with positions") {
    SUBCASE("duplicate id") {
        try {
            parse_graph("vertex a genus=0 euler=-2\nvertex a genus=0 euler=-3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(has_code(e, Diagnostic::Code::duplicate_id));
            const Diagnostic& d = first_with(e, Diagnostic::Code::duplicate_id);
            CHECK(d.line == 2);
            CHECK(d.col == 8);
        }
    }
    SUBCASE("dangling endpoint") {
        try {
            parse_graph("vertex a genus=0 euler=-2\nedge a b\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(has_code(e, Diagnostic::Code::dangling_endpoint));
            const Diagnostic& d = first_with(e, Diagnostic::Code::dangling_endpoint);
            CHECK(d.line == 2);
            CHECK(d.col == 8);
        }
    }
    SUBCASE("negative genus") {
        try {
            parse_graph("vertex a genus=-1 euler=-2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(has_code(e, Diagnostic::Code::negative_genus));
        }
    }
    SUBCASE("self loop") {
        try {
            parse_graph("vertex a genus=0 euler=-2\nedge a a\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(has_code(e, Diagnostic::Code::self_loop));
        }
    }
    SUBCASE("malformed syntax") {
        try {
            parse_graph("vortex a genus=0 euler=-2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(has_code(e, Diagnostic::Code::malformed_syntax));
            CHECK(first_with(e, Diagnostic::Code::malformed_syntax).line == 1);
        }
    }
    SUBCASE("multiple findings reported together") {
        try {
            parse_graph("vertex a genus=-1 euler=-2\nedge a b\nedge a a\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.diagnostics().size() == 3);
        }
    }
}

TEST_CASE("vertex ids must be tokens") {
    CHECK(is_token("a"));
    CHECK(is_token("leg-3_b.2"));
    CHECK_FALSE(is_token(""));
    CHECK_FALSE(is_token("a b"));
    CHECK_FALSE(is_token("a#b"));
    CHECK_THROWS_AS(PlumbingGraph({{"a b", 0, -2}}, {}), std::invalid_argument);
    // The JSON format can carry arbitrary strings; the parser rejects them.
    CHECK_THROWS_AS(parse_graph(R"({"vertices":[{"id":"a b","genus":0,"euler":-2}],"edges":[]})"),
                    ParseError);
}

TEST_CASE("comments, blank lines and spacing are tolerated") {
    PlumbingGraph g = parse_graph("# two vertices\n\nvertex a genus=0 euler=-2   # center\n"
                                  "vertex b genus=0 euler=-3\nedge a b\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("emit then parse is the identity on Y_1, both formats") {
    PlumbingGraph y1 = make_yp(1);
    CHECK(parse_graph(emit_graph(y1, GraphFormat::dsl)) == y1);
    CHECK(parse_graph(emit_graph(y1, GraphFormat::json)) == y1);
}

TEST_CASE("Y_2 DSL document has 6 vertex lines and 5 edge lines in order") {
    std::string doc = emit_graph(make_yp(2), GraphFormat::dsl);
    std::istringstream in(doc);
    std::string line;
    std::size_t vertex_lines = 0, edge_lines = 0;
    bool edges_started = false;
    while (std::getline(in, line)) {
        if (line.rfind("vertex ", 0) == 0) {
            CHECK(!edges_started);  // declaration order: vertices first
            ++vertex_lines;
        } else if (line.rfind("edge ", 0) == 0) {
            edges_started = true;
            ++edge_lines;
        }
    }
    CHECK(vertex_lines == 6);
    CHECK(edge_lines == 5);
}

TEST_CASE("emitted JSON conforms to the published schema") {
    auto schema = plumb::tests::load_json_file(std::string(PLUMB_SCHEMA_DIR) + "/plumbing-graph.schema.json");
    for (int p : {1, 2, 5}) {
        auto doc = nlohmann::json::parse(emit_graph(make_yp(p), GraphFormat::json));
        auto violations = plumb::tests::schema_violations(schema, doc);
        CHECK_MESSAGE(violations.empty(), (violations.empty() ? "" : violations.front()));
    }
}

TEST_CASE("single -2 vertex emits one vertex line and no edges") {
    PlumbingGraph g = parse_graph("vertex a genus=0 euler=-2");
    CHECK(emit_graph(g, GraphFormat::dsl) == "vertex a genus=0 euler=-2\n");
}

TEST_CASE("intersection matrix by definition") {
    SUBCASE("single vertex e=-1") {
        PlumbingGraph g = parse_graph("vertex a genus=0 euler=-1");
        IntMatrix m = intersection_matrix(g);
        REQUIRE(m.size() == 1);
        CHECK(m.at(0, 0) == -1);
    }
    SUBCASE("two -2 vertices joined by one edge") {
        PlumbingGraph g = parse_graph("vertex a genus=0 euler=-2\nvertex b genus=0 euler=-2\nedge a b\n");
        IntMatrix m = intersection_matrix(g);
        CHECK(m == IntMatrix{{-2, 1}, {1, -2}});
    }
    SUBCASE("parallel edges accumulate multiplicity") {
        PlumbingGraph g = parse_graph("vertex a genus=0 euler=-2\nvertex b genus=0 euler=-2\nedge a b\nedge a b\n");
        IntMatrix m = intersection_matrix(g);
        CHECK(m.at(0, 1) == 2);
        CHECK(m.at(1, 0) == 2);
    }
    SUBCASE("Y_1 diagonal in canonical order") {
        IntMatrix m = intersection_matrix(make_yp(1));
        REQUIRE(m.size() == 5);
        std::vector<BigInt> expected = {-2, -2, -2, -2, -3};
        for (std::size_t i = 0; i < 5; ++i) CHECK(m.at(i, i) == expected[i]);
        CHECK(m.at(2, 4) == 1);  // center meets the -3 vertex
        CHECK(m.at(0, 1) == 1);
    }
}

TEST_CASE("make_yp layout") {
    SUBCASE("p=1 gives Euler sequence (-2,-2,-2,-2,-3)") {
        PlumbingGraph g = make_yp(1);
        REQUIRE(g.vertex_count() == 5);
        std::vector<std::int64_t> eulers;
        for (const Vertex& v : g.vertices()) eulers.push_back(v.euler);
        CHECK(eulers == std::vector<std::int64_t>{-2, -2, -2, -2, -3});
    }
    SUBCASE("p=3 has 7 vertices and a degree-3 center") {
        PlumbingGraph g = make_yp(3);
        REQUIRE(g.vertex_count() == 7);
        CHECK(g.degree(2) == 3);
    }
    SUBCASE("p < 1 rejected") {
        CHECK_THROWS_AS(make_yp(0), std::invalid_argument);
        CHECK_THROWS_AS(make_yp(-3), std::invalid_argument);
    }
    SUBCASE("p+4 vertices, p+3 edges, tree, for p=1..50") {
        for (int p = 1; p <= 50; ++p) {
            PlumbingGraph g = make_yp(p);
            CHECK(g.vertex_count() == static_cast<std::size_t>(p) + 4);
            CHECK(g.edge_count() == static_cast<std::size_t>(p) + 3);
            CHECK(g.is_tree());
        }
    }
}

TEST_CASE("make_star") {
    SUBCASE("no legs gives the single vertex") {
        PlumbingGraph g = make_star(-2, {});
        REQUIRE(g.vertex_count() == 1);
        CHECK(g.vertex(0).euler == -2);
    }
    SUBCASE("empty chain within the list rejected") {
        CHECK_THROWS_AS(make_star(-2, {{-2}, {}}), std::invalid_argument);
    }
    SUBCASE("three single-vertex legs give a 4-vertex star") {
        PlumbingGraph g = make_star(-1, {{-2}, {-2}, {-2}});
        REQUIRE(g.vertex_count() == 4);
        CHECK(g.degree(0) == 3);
        CHECK(g.is_tree());
    }
    SUBCASE("make_star(-2, [[-3],[-2,-2],[-2,-2]]) is make_yp(2) up to relabeling") {
        PlumbingGraph star = make_star(-2, {{-3}, {-2, -2}, {-2, -2}});
        PlumbingGraph yp = make_yp(2);
        REQUIRE(star.vertex_count() == yp.vertex_count());

        // Explicit relabeling: star order (center, -3, leg2 out, leg3 out)
        // onto the canonical Y_2 order.
        std::vector<std::size_t> to_yp = {2, 5, 1, 0, 3, 4};
        for (std::size_t i = 0; i < star.vertex_count(); ++i) {
            CHECK(star.vertex(i).euler == yp.vertex(to_yp[i]).euler);
            CHECK(star.vertex(i).genus == yp.vertex(to_yp[i]).genus);
        }
        auto edge_set = [](const PlumbingGraph& g, const std::vector<std::size_t>& relabel) {
            std::vector<std::pair<std::size_t, std::size_t>> out;
            for (const auto& [a, b] : g.edges()) {
                std::size_t x = relabel.empty() ? a : relabel[a];
                std::size_t y = relabel.empty() ? b : relabel[b];
                out.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        CHECK(edge_set(star, to_yp) == edge_set(yp, {}));
    }
}

TEST_CASE("validate") {
    SUBCASE("two vertices, no edges: disconnected") {
        PlumbingGraph g = parse_graph("vertex a genus=0 euler=-2\nvertex b genus=0 euler=-2\n");
        auto diagnostics = validate(g);
        REQUIRE(diagnostics.size() == 1);
        CHECK(diagnostics[0].code == Diagnostic::Code::disconnected);
    }
    SUBCASE("Y_5 is clean") {
        CHECK(validate(make_yp(5)).empty());
    }
    SUBCASE("empty document is rejected by validate") {
        PlumbingGraph g = parse_graph("# nothing here\n");
        auto diagnostics = validate(g);
        REQUIRE(diagnostics.size() == 1);
        CHECK(diagnostics[0].code == Diagnostic::Code::empty_graph);
    }
}

TEST_CASE("round trip holds on random trees up to 12 vertices, both formats") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 12);
        PlumbingGraph g = plumb::tests::random_tree(rng, size(rng), -9, -1);
        CHECK(parse_graph(emit_graph(g, GraphFormat::dsl)) == g);
        CHECK(parse_graph(emit_graph(g, GraphFormat::json)) == g);
    }
}

TEST_CASE("intersection matrix is symmetric with the Euler diagonal on random trees") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 10);
        PlumbingGraph g = plumb::tests::random_tree(rng, size(rng), -6, -1);
        IntMatrix m = intersection_matrix(g);
        CHECK(m.is_symmetric());
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            CHECK(m.at(i, i) == g.vertex(i).euler);
        }
    }
}

} // TEST_SUITE
