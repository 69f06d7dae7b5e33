#ifndef PLUMB_SEIFERT_HPP
#define PLUMB_SEIFERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/numeric.hpp"
#include "plumb/tri.hpp"

namespace plumb {

// Descending negative continued fraction a1 - 1/(a2 - 1/(...)), all terms
// <= -2. Such a chain always evaluates to a rational < -1.
class ContinuedFractionChain {
public:
    // Throws std::invalid_argument if empty or any term > -2.
    explicit ContinuedFractionChain(std::vector<std::int64_t> terms);

    const std::vector<std::int64_t>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const ContinuedFractionChain&) const = default;

private:
    std::vector<std::int64_t> terms_;
};

// The unique all-terms-<=-2 expansion of r. Requires r < -1 (throws
// std::invalid_argument otherwise).
ContinuedFractionChain negative_cf(const Rational& r);

// Exact value of the chain.
Rational cf_eval(const ContinuedFractionChain& chain);

// Shape classification; see GraphShape. Requires a connected graph.
GraphShape classify_shape(const PlumbingGraph& g);

// Seifert invariants Y(e0; b1/a1, ..., bk/ak) over S^2 (or over a genus-g
// surface for a single genus-carrying vertex). Exceptional fibers are
// stored sorted ascending, so operator== is multiset equality.
class SeifertData {
public:
    // Each fiber must lie in (0,1) (throws std::invalid_argument).
    SeifertData(std::int64_t e0, std::vector<Rational> exceptional_fibers, int base_genus = 0);

    std::int64_t e0() const { return e0_; }
    const std::vector<Rational>& exceptional() const { return exceptional_; }
    int base_genus() const { return base_genus_; }

    // Denominators a_i of the exceptional fibers, in stored order.
    std::vector<BigInt> alphas() const;

    bool operator==(const SeifertData&) const = default;

private:
    std::int64_t e0_ = 0;
    std::vector<Rational> exceptional_;
    int base_genus_ = 0;
};

std::string to_string(const SeifertData& s);

// Reads Seifert invariants off a star, chain or single-vertex graph.
//   - star: e0 is the center weight; each leg, read center outward, is a
//     negative continued fraction with value s_i < -1, and contributes the
//     exceptional fiber r_i = -1/s_i in (0,1).
//   - chain: treated as a star with <= 2 legs centered at the first vertex
//     in declaration order.
//   - single vertex: e0 with no exceptional fibers; may carry base genus.
// Requires every leg entry <= -2 (the plumbing-calculus reduced form);
// throws PreconditionError for other shapes, positive genus off the
// single-vertex case, or non-reduced legs.
SeifertData seifert_data(const PlumbingGraph& g);

// e0 + sum r_i, exact. Negative for every negative-definite star graph.
Rational orbifold_euler(const SeifertData& s);

// Fundamental-group finiteness for the plumbed manifold:
//   genus > 0 anywhere            -> infinite (free homology rank >= 2g)
//   cyclic graph                  -> infinite (free homology rank >= 1)
//   chain / single vertex         -> finite (lens space)
//   star, 3 legs, reduced legs    -> finite iff 1/a1 + 1/a2 + 1/a3 > 1
//   star, >= 4 legs, reduced legs -> infinite (no spherical base orbifold)
//   multi-node, fully reduced     -> infinite (nontrivial torus decomposition)
//   anything else                 -> unknown
// Star and multi-node branches demand reduced weights because a stray -1
// vertex can hide a smaller link: the negative-definite star with center
// -3 and legs [-1],[-2],[-2],[-2] is a one-blow-up presentation of
// Y(-2; 1/2,1/2,1/2), whose group is finite. Requires a connected,
// negative-definite graph.
Pi1 pi1_is_finite(const PlumbingGraph& g);

// Node-and-chain skeleton of the torus decomposition. Nodes are vertices
// of degree >= 3 or positive genus; each node owns its dead-end chains
// (legs) and node-to-node chains are the separating tori. Computed for
// trees; anything with a cycle degrades to status unknown with a
// diagnostic. A torus whose connecting chain is empty (adjacent nodes) is
// marked minimality_verified = false.
struct JsjSkeleton {
    struct Piece {
        std::size_t node;
        std::vector<std::vector<std::size_t>> legs;
    };
    struct Torus {
        std::size_t node_a;
        std::size_t node_b;
        std::vector<std::size_t> chain;
        bool minimality_verified = true;
    };

    bool known = true;
    std::string diagnostic;
    std::vector<Piece> pieces;
    std::vector<Torus> tori;
    bool is_trivial = true;  // <= 1 node: empty torus set, Seifert fibered
};

JsjSkeleton jsj_skeleton(const PlumbingGraph& g);

// Atoroidality:
//   chain / single genus-0 vertex -> yes (lens space)
//   star with exactly 3 legs      -> yes (a Seifert fibration over S^2
//                                    with at most 3 exceptional fibers is
//                                    small or lens, hence atoroidal)
//   genus > 0 node in a tree      -> no (vertical incompressible torus)
//   >= 2 nodes, fully reduced     -> no (skeleton torus is essential)
//   star >= 4 legs, reduced legs  -> no
//   otherwise                     -> unknown
// Requires a connected, negative-definite graph.
Tri is_atoroidal(const PlumbingGraph& g);

// True when every genus-0 vertex has weight <= -2, i.e. no blow-down or
// absorption move applies and the graph is its own reduced form.
bool is_reduced(const PlumbingGraph& g);

} // namespace plumb

#endif
