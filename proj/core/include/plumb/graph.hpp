#ifndef PLUMB_GRAPH_HPP
#define PLUMB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plumb/errors.hpp"
#include "plumb/matrix.hpp"

namespace plumb {

// Vertex ids are tokens: nonempty, no whitespace, no '#', so every graph
// serializes to the line-oriented format.
bool is_token(std::string_view id);

// A plumbing-graph vertex: an oriented circle bundle of Euler number
// `euler` over a closed surface of genus `genus`.
struct Vertex {
    std::string id;
    int genus = 0;
    std::int64_t euler = 0;

    bool operator==(const Vertex&) const = default;
};

// Weighted plumbing graph. Vertices are ordered; that order is canonical
// and fixes the row/column order of the intersection matrix and the index
// order of every divisor. Edges form a multiset of unordered pairs
// (parallel edges allowed, self-loops rejected). Immutable after
// construction.
class PlumbingGraph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    PlumbingGraph() = default;

    // Validates: unique ids, genus >= 0, endpoints in range, no self-loops.
    // Throws std::invalid_argument on violation; parse_graph performs the
    // same checks but reports Diagnostics instead.
    PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbor indices with multiplicity (a double edge lists the neighbor
    // twice). Degree counts edge ends, so it equals neighbors(i).size().
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adjacency_.at(i); }
    std::size_t degree(std::size_t i) const { return adjacency_.at(i).size(); }

    std::optional<std::size_t> index_of(std::string_view id) const;

    bool is_connected() const;
    // First Betti number of the graph itself: E - V + components.
    std::size_t betti1() const;
    bool is_tree() const { return is_connected() && betti1() == 0; }

    int total_genus() const;

    // Vertices equal (same order, ids, weights) and edge multisets equal.
    bool operator==(const PlumbingGraph& other) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

// Coarse shape taxonomy. The kinds are mutually exclusive and exhaustive
// for connected graphs:
//   cyclic        the graph contains a cycle (including parallel edges)
//   single-vertex one vertex, no edges
//   chain         tree, max degree 2, >= 2 vertices, all genera zero
//   star          tree with exactly one vertex of degree >= 3, all genera zero
//   multi-node    any other tree (>= 2 branch vertices, or positive genus)
// `nodes` lists the JSJ-relevant vertices (degree >= 3 or genus > 0) for
// every kind.
struct GraphShape {
    enum class Kind { single_vertex, chain, star, multi_node, cyclic };

    Kind kind = Kind::single_vertex;
    std::optional<std::size_t> center;            // star only
    std::vector<std::vector<std::size_t>> legs;   // star only, center outward
    std::vector<std::size_t> nodes;
};

std::string_view to_string(GraphShape::Kind kind);

// Diagnostics are the result: empty list iff the graph is nonempty,
// connected and structurally sound. (Structural invariants are enforced at
// construction; this reports connectivity and emptiness.)
std::vector<Diagnostic> validate(const PlumbingGraph& g);

// Symmetric matrix with diagonal e_i and off-diagonal entries equal to the
// edge multiplicity, in vertex order.
IntMatrix intersection_matrix(const PlumbingGraph& g);

// Star-shaped tree with one central genus-0 vertex of weight e0 and one
// chain of genus-0 vertices per entry of `legs`, attached center outward.
// Canonical vertex order: center first, then each leg in order. Vertex ids
// are e1..en in that order. Chains inside `legs` must be nonempty.
PlumbingGraph make_star(std::int64_t e0, const std::vector<std::vector<std::int64_t>>& legs);

// The Y_p family: star with center -2 and legs [-2,-2], [-2 x p], [-3].
// Canonical vertex order: outer leg-B vertex, inner leg-B vertex, center,
// the p-chain from the center outward, and the -3 vertex last. p >= 1.
PlumbingGraph make_yp(int p);

} // namespace plumb

#endif
