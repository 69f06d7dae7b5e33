#include "support/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "plumb/lattice.hpp"

namespace plumb::tests {

EdgeList tree_from_pruefer(std::size_t n, const std::vector<std::size_t>& pruefer) {
    if (n == 0) throw std::invalid_argument("tree_from_pruefer: n must be >= 1");
    EdgeList edges;
    if (n == 1) return edges;
    if (pruefer.size() != n - 2) throw std::invalid_argument("tree_from_pruefer: bad sequence length");

    std::vector<std::size_t> degree(n, 1);
    for (std::size_t v : pruefer) ++degree[v];

    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    for (std::size_t v : pruefer) {
        std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
        if (--degree[v] == 1) leaves.insert(v);
    }
    std::size_t a = *leaves.begin();
    std::size_t b = *std::next(leaves.begin());
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return edges;
}

namespace {

// Rooted AHU encoding: leaves are "()", internal nodes wrap the sorted
// encodings of their children.
std::string ahu(std::size_t v, std::size_t parent, const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<std::string> children;
    for (std::size_t w : adj[v]) {
        if (w != parent) children.push_back(ahu(w, v, adj));
    }
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const std::string& c : children) out += c;
    out += ")";
    return out;
}

// The center (1 or 2 vertices) found by repeatedly stripping leaves.
std::vector<std::size_t> tree_centers(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
    if (n == 1) return {0};
    std::vector<std::size_t> degree(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = adj[v].size();
        if (degree[v] <= 1) layer.push_back(v);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<std::size_t> next;
        for (std::size_t v : layer) {
            for (std::size_t w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    return layer;
}

} // namespace

std::string tree_shape_key(std::size_t n, const EdgeList& edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::size_t> centers = tree_centers(n, adj);
    std::string best;
    for (std::size_t c : centers) {
        std::string key = ahu(c, c, adj);
        if (best.empty() || key < best) best = key;
    }
    return best;
}

std::vector<EdgeList> all_tree_shapes(std::size_t n) {
    std::vector<EdgeList> shapes;
    std::map<std::string, bool> seen;
    if (n == 1) return {EdgeList{}};

    std::vector<std::size_t> pruefer(n >= 2 ? n - 2 : 0, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == pruefer.size()) {
            EdgeList edges = tree_from_pruefer(n, pruefer);
            std::string key = tree_shape_key(n, edges);
            if (!seen.emplace(key, true).second) return;
            shapes.push_back(std::move(edges));
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            pruefer[pos] = v;
            walk(pos + 1);
        }
    };
    walk(0);
    return shapes;
}

PlumbingGraph graph_from(const EdgeList& edges, const std::vector<std::int64_t>& weights,
                         const std::vector<int>& genera) {
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        int genus = i < genera.size() ? genera[i] : 0;
        vertices.push_back({"v" + std::to_string(i + 1), genus, weights[i]});
    }
    return PlumbingGraph(std::move(vertices), edges);
}

PlumbingGraph random_tree(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<std::size_t> pruefer;
    if (n >= 3) {
        std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
        for (std::size_t i = 0; i + 2 < n; ++i) pruefer.push_back(vertex(rng));
    }
    std::uniform_int_distribution<std::int64_t> weight(lo, hi);
    std::vector<std::int64_t> weights;
    for (std::size_t i = 0; i < n; ++i) weights.push_back(weight(rng));
    return graph_from(tree_from_pruefer(n, pruefer), weights);
}

PlumbingGraph random_negative_definite_tree(std::mt19937_64& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> size(1, max_vertices);
    for (;;) {
        PlumbingGraph g = random_tree(rng, size(rng), -5, -2);
        if (is_negative_definite(intersection_matrix(g))) return g;
    }
}

void for_each_weighting(std::size_t n, std::int64_t lo, std::int64_t hi,
                        const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    std::vector<std::int64_t> weights(n, lo);
    for (;;) {
        fn(weights);
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (weights[pos] < hi) {
                ++weights[pos];
                for (std::size_t i = pos + 1; i < n; ++i) weights[i] = lo;
                break;
            }
            if (pos == 0) return;
        }
    }
}

} // namespace plumb::tests
