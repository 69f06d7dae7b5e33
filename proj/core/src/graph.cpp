#include "plumb/graph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace plumb {

bool is_token(std::string_view id) {
    if (id.empty()) return false;
    for (char c : id) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '#') return false;
    }
    return true;
}

PlumbingGraph::PlumbingGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::unordered_set<std::string> seen;
    for (const Vertex& v : vertices_) {
        if (!is_token(v.id)) {
            throw std::invalid_argument("vertex id is not a token: '" + v.id + "'");
        }
        if (!seen.insert(v.id).second) {
            throw std::invalid_argument("duplicate vertex id: " + v.id);
        }
        if (v.genus < 0) {
            throw std::invalid_argument("negative genus on vertex " + v.id);
        }
    }
    for (const Edge& e : edges_) {
        if (e.first >= vertices_.size() || e.second >= vertices_.size()) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.first == e.second) {
            throw std::invalid_argument("self-loop on vertex " + vertices_[e.first].id);
        }
    }
    adjacency_.resize(vertices_.size());
    for (const Edge& e : edges_) {
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
}

std::optional<std::size_t> PlumbingGraph::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].id == id) return i;
    }
    return std::nullopt;
}

bool PlumbingGraph::is_connected() const {
    if (vertices_.empty()) return false;
    std::vector<bool> seen(vertices_.size(), false);
    std::vector<std::size_t> stack = {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adjacency_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertices_.size();
}

std::size_t PlumbingGraph::betti1() const {
    // E - V + number of components
    std::vector<bool> seen(vertices_.size(), false);
    std::size_t components = 0;
    for (std::size_t start = 0; start < vertices_.size(); ++start) {
        if (seen[start]) continue;
        ++components;
        std::vector<std::size_t> stack = {start};
        seen[start] = true;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adjacency_[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
    }
    return edges_.size() + components - vertices_.size();
}

int PlumbingGraph::total_genus() const {
    int total = 0;
    for (const Vertex& v : vertices_) total += v.genus;
    return total;
}

bool PlumbingGraph::operator==(const PlumbingGraph& other) const {
    if (vertices_ != other.vertices_) return false;
    auto normalized = [](const std::vector<Edge>& edges) {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (const Edge& e : edges) {
            out.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    return normalized(edges_) == normalized(other.edges_);
}

std::string_view to_string(GraphShape::Kind kind) {
    switch (kind) {
        case GraphShape::Kind::single_vertex: return "single-vertex";
        case GraphShape::Kind::chain: return "chain";
        case GraphShape::Kind::star: return "star";
        case GraphShape::Kind::multi_node: return "multi-node";
        case GraphShape::Kind::cyclic: return "cyclic";
    }
    return "unknown";
}

std::vector<Diagnostic> validate(const PlumbingGraph& g) {
    std::vector<Diagnostic> out;
    if (g.vertex_count() == 0) {
        out.push_back({Diagnostic::Code::empty_graph, 0, 0, "graph has no vertices"});
        return out;
    }
    if (!g.is_connected()) {
        out.push_back({Diagnostic::Code::disconnected, 0, 0, "graph is not connected"});
    }
    return out;
}

IntMatrix intersection_matrix(const PlumbingGraph& g) {
    IntMatrix m(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        m.at(i, i) = g.vertex(i).euler;
    }
    for (const auto& [a, b] : g.edges()) {
        m.at(a, b) += 1;
        m.at(b, a) += 1;
    }
    return m;
}

namespace {

std::string seq_id(std::size_t i) { return "e" + std::to_string(i + 1); }

} // namespace

PlumbingGraph make_star(std::int64_t e0, const std::vector<std::vector<std::int64_t>>& legs) {
    for (const auto& leg : legs) {
        if (leg.empty()) {
            throw std::invalid_argument("make_star: empty leg chain");
        }
    }
    std::vector<Vertex> vertices;
    std::vector<PlumbingGraph::Edge> edges;
    vertices.push_back({seq_id(0), 0, e0});
    for (const auto& leg : legs) {
        std::size_t previous = 0;
        for (std::int64_t weight : leg) {
            std::size_t index = vertices.size();
            vertices.push_back({seq_id(index), 0, weight});
            edges.emplace_back(previous, index);
            previous = index;
        }
    }
    return PlumbingGraph(std::move(vertices), std::move(edges));
}

PlumbingGraph make_yp(int p) {
    if (p < 1) {
        throw std::invalid_argument("make_yp: p must be >= 1");
    }
    const std::size_t n = static_cast<std::size_t>(p) + 4;
    std::vector<Vertex> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        vertices.push_back({seq_id(i), 0, -2});
    }
    vertices.push_back({seq_id(n - 1), 0, -3});

    // Order: leg B outer (0), leg B inner (1), center (2), the p-chain
    // (3 .. p+2) outward, then the -3 vertex (p+3).
    std::vector<PlumbingGraph::Edge> edges;
    edges.emplace_back(0, 1);
    edges.emplace_back(1, 2);
    edges.emplace_back(2, 3);
    for (int i = 0; i + 1 < p; ++i) {
        edges.emplace_back(3 + i, 4 + i);
    }
    edges.emplace_back(2, n - 1);
    return PlumbingGraph(std::move(vertices), std::move(edges));
}

} // namespace plumb
