#ifndef PLUMB_TESTS_GENERATORS_HPP
#define PLUMB_TESTS_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb::tests {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Labeled tree on n >= 1 vertices decoded from a Pruefer sequence
// (empty sequence for n <= 2).
EdgeList tree_from_pruefer(std::size_t n, const std::vector<std::size_t>& pruefer);

// Canonical string of the unlabeled tree shape (center-rooted AHU form).
std::string tree_shape_key(std::size_t n, const EdgeList& edges);

// One edge list per isomorphism class of trees on n vertices.
std::vector<EdgeList> all_tree_shapes(std::size_t n);

PlumbingGraph graph_from(const EdgeList& edges, const std::vector<std::int64_t>& weights,
                         const std::vector<int>& genera = {});

// Uniform random labeled tree with weights drawn from [lo, hi].
PlumbingGraph random_tree(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi);

// Rejection-samples random trees until one is negative definite.
PlumbingGraph random_negative_definite_tree(std::mt19937_64& rng, std::size_t max_vertices);

// Every weight tuple in [lo, hi]^n, in lexicographic order, fed to fn.
void for_each_weighting(std::size_t n, std::int64_t lo, std::int64_t hi,
                        const std::function<void(const std::vector<std::int64_t>&)>& fn);

} // namespace plumb::tests

#endif
