#ifndef PLUMB_LATTICE_HPP
#define PLUMB_LATTICE_HPP

#include <vector>

#include "plumb/graph.hpp"
#include "plumb/matrix.hpp"

namespace plumb {

// Exact negative-definiteness test via Sylvester's criterion: M is
// negative definite iff (-1)^k det(M_k) > 0 for every leading principal
// minor M_k. The minors are the pivots of one fraction-free elimination
// pass, so no determinant is ever recomputed and no rounding exists.
// Requires a symmetric matrix (throws std::invalid_argument otherwise).
bool is_negative_definite(const IntMatrix& m);

// Exact determinant, fraction-free (Bareiss) with row pivoting.
BigInt determinant(const IntMatrix& m);

// U * M * V = diag(d) with U, V unimodular and d_1 | d_2 | ... | d_n,
// all d_i >= 0. Deterministic for a fixed input: the pivot is the entry
// of smallest nonzero absolute value in the trailing submatrix, ties
// broken by lowest (row, col).
struct SmithDecomposition {
    std::vector<BigInt> invariant_factors;
    IntMatrix u;
    IntMatrix v;

    IntMatrix diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

// First homology of the plumbed 3-manifold M(T), presented by the
// intersection matrix:
//   free rank = 2*sum(g_i) + b1(graph) + corank(I)
//   torsion   = the invariant factors of I that exceed 1
// This presentation is standard background, external to the verdict
// chain's quoted theorems; reports mark it as such.
struct HomologyDescriptor {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool finite() const { return free_rank == 0; }
    // Product of torsion factors; meaningful as |H1| only when finite().
    BigInt torsion_order() const;

    bool operator==(const HomologyDescriptor&) const = default;
};

// Requires a connected graph.
HomologyDescriptor homology(const PlumbingGraph& g);

} // namespace plumb

#endif
