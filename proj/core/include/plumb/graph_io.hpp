#ifndef PLUMB_GRAPH_IO_HPP
#define PLUMB_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "plumb/graph.hpp"

namespace plumb {

enum class GraphFormat { dsl, json };

// Accepts either of the two documented formats and auto-detects between
// them: a document whose first non-blank character is '{' is parsed as
// JSON, anything else as the line-oriented DSL.
//
//   DSL:  vertex <id> genus=<int> euler=<int>
//         edge <id> <id>
//         '#' starts a comment; vertex order = declaration order.
//   JSON: {"vertices":[{"id":str,"genus":int,"euler":int},...],
//          "edges":[[str,str],...]}
//
// Throws ParseError carrying one Diagnostic per finding.
PlumbingGraph parse_graph(std::string_view text);

// Canonical serialization; parse_graph(emit_graph(g, f)) == g for both
// formats. The DSL form lists vertices then edges in stored order; the
// JSON form conforms to schemas/plumbing-graph.schema.json.
std::string emit_graph(const PlumbingGraph& g, GraphFormat format);

} // namespace plumb

#endif
