#ifndef PLUMB_CYCLES_HPP
#define PLUMB_CYCLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/numeric.hpp"

namespace plumb {

// Effective divisor Z = sum z_i E_i, indexed by vertex order. Coefficients
// are machine integers: every routine that grows them is desk scale and
// guarded, while lattice-side arithmetic stays arbitrary precision.
struct Divisor {
    std::vector<std::int64_t> coefficients;

    std::size_t size() const { return coefficients.size(); }
    std::int64_t operator[](std::size_t i) const { return coefficients[i]; }
    bool all_positive() const;

    bool operator==(const Divisor&) const = default;
};

std::string to_string(const Divisor& z);

// Z . E_i under the intersection form: z_i * e_i plus the multiplicity-
// weighted sum of z over the neighbors of i. Throws std::out_of_range for
// a bad index.
std::int64_t pair(const Divisor& z, std::size_t i, const PlumbingGraph& g);

enum class IncrementOrder { lowest_index, highest_index };

// Componentwise-smallest nonzero effective divisor with Z . E_i <= 0 for
// all i, by Laufer's iteration: start from the all-ones divisor and, while
// some pairing is positive, bump that coefficient by one. The fixed point
// does not depend on the increment order; the order parameter exists so
// that independence can be tested. Requires a connected, negative-definite
// graph (throws PreconditionError otherwise; the iteration need not
// terminate on indefinite forms).
Divisor fundamental_cycle(const PlumbingGraph& g,
                          IncrementOrder order = IncrementOrder::lowest_index);

// Independent oracle for the same divisor: searches the box 1 <= z_i <=
// bound exhaustively and returns the componentwise minimum of all
// divisors satisfying Z . E_i <= 0, or nullopt if none exists in the box.
//
// A divisor with Z . E_i <= 0 everywhere on a connected graph has full
// support (a zero coefficient adjacent to the support would pair
// positively), so searching the all-positive box loses nothing. The
// componentwise minimum is well-defined because on negative-definite
// graphs the candidate set is closed under componentwise min; the search
// verifies that closure and throws std::logic_error if it ever fails.
// Requires a connected graph.
std::optional<Divisor> brute_force_min_cycle(const PlumbingGraph& g, int bound);

// Artin's combinatorial rationality data. artin_value is
//   Z.Z + sum z_i (2 g_i - 2 - e_i)
// with the genus-corrected adjunction summand, so positive-genus inputs
// evaluate honestly instead of tripping the genus-0 printed form. The link
// is rational iff every genus vanishes and artin_value == -2.
struct RationalityCertificate {
    Divisor fundamental_cycle;
    BigInt self_intersection;
    BigInt artin_value;
    bool is_rational = false;
};

// Requires a connected, negative-definite graph (propagates the
// fundamental-cycle precondition).
RationalityCertificate rationality(const PlumbingGraph& g);

} // namespace plumb

#endif
