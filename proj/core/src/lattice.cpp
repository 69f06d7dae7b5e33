#include "plumb/lattice.hpp"

#include <stdexcept>

namespace plumb {

namespace {

void require_nonempty(const IntMatrix& m) {
    if (m.size() == 0) throw std::invalid_argument("empty matrix");
}

} // namespace

bool is_negative_definite(const IntMatrix& m) {
    require_nonempty(m);
    if (!m.is_symmetric()) {
        throw std::invalid_argument("is_negative_definite: matrix is not symmetric");
    }

    // One fraction-free elimination pass. Without pivoting, the k-th pivot
    // equals the k-th leading principal minor, which is exactly what
    // Sylvester's criterion needs; a zero pivot already refutes
    // definiteness, so the division by it is never reached.
    const std::size_t n = m.size();
    IntMatrix a = m;
    BigInt previous = 1;
    bool expect_negative = true;  // (-1)^k det(M_k) > 0, k = 1, 2, ...
    for (std::size_t k = 0; k < n; ++k) {
        const BigInt& minor_k = a.at(k, k);
        if (expect_negative ? minor_k >= 0 : minor_k <= 0) return false;
        expect_negative = !expect_negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / previous;
            }
        }
        previous = a.at(k, k);
    }
    return true;
}

BigInt determinant(const IntMatrix& m) {
    require_nonempty(m);
    const std::size_t n = m.size();
    IntMatrix a = m;
    BigInt previous = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / previous;
            }
            a.at(i, k) = 0;
        }
        previous = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

IntMatrix SmithDecomposition::diagonal() const {
    IntMatrix d(invariant_factors.size());
    for (std::size_t i = 0; i < invariant_factors.size(); ++i) d.at(i, i) = invariant_factors[i];
    return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    require_nonempty(m);
    const std::size_t n = m.size();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    // Row ops act on u, column ops on v, keeping a == u * m * v throughout.
    auto swap_rows = [&](std::size_t r, std::size_t s) {
        if (r == s) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(r, j), a.at(s, j));
            std::swap(u.at(r, j), u.at(s, j));
        }
    };
    auto swap_cols = [&](std::size_t c, std::size_t d) {
        if (c == d) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(a.at(i, c), a.at(i, d));
            std::swap(v.at(i, c), v.at(i, d));
        }
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& factor) {
        if (factor == 0) return;
        for (std::size_t j = 0; j < n; ++j) {
            a.at(dst, j) += factor * a.at(src, j);
            u.at(dst, j) += factor * u.at(src, j);
        }
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& factor) {
        if (factor == 0) return;
        for (std::size_t i = 0; i < n; ++i) {
            a.at(i, dst) += factor * a.at(i, src);
            v.at(i, dst) += factor * v.at(i, src);
        }
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < n; ++j) {
            a.at(r, j) = -a.at(r, j);
            u.at(r, j) = -u.at(r, j);
        }
    };

    // Smallest nonzero absolute value in the trailing submatrix, lowest
    // (row, col) on ties. This is the fixed pivoting rule that makes the
    // output deterministic.
    auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        BigInt best_abs = 0;
        for (std::size_t i = t; i < n; ++i) {
            for (std::size_t j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                BigInt mag = abs(a.at(i, j));
                if (!best || mag < best_abs) {
                    best = {{i, j}};
                    best_abs = mag;
                }
            }
        }
        return best;
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            auto pivot = find_pivot(t);
            if (!pivot) {
                t = n;  // trailing block is zero; remaining factors stay 0
                break;
            }
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) != 0) {
                    add_row(i, t, -(a.at(i, t) / a.at(t, t)));
                    if (a.at(i, t) != 0) clean = false;  // remainder left; re-pivot
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) != 0) {
                    add_col(j, t, -(a.at(t, j) / a.at(t, t)));
                    if (a.at(t, j) != 0) clean = false;
                }
            }
            if (!clean) continue;

            // Divisibility fix-up: fold a non-multiple row into row t and
            // restart the reduction at this step.
            bool divisible = true;
            for (std::size_t i = t + 1; i < n && divisible; ++i) {
                for (std::size_t j = t + 1; j < n && divisible; ++j) {
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divisible = false;
                    }
                }
            }
            if (divisible) break;
        }
        if (t == n) break;
        if (a.at(t, t) < 0) negate_row(t);
    }

    SmithDecomposition out;
    out.invariant_factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.invariant_factors.push_back(a.at(i, i));
    out.u = std::move(u);
    out.v = std::move(v);
    return out;
}

BigInt HomologyDescriptor::torsion_order() const {
    BigInt order = 1;
    for (const BigInt& t : torsion) order *= t;
    return order;
}

HomologyDescriptor homology(const PlumbingGraph& g) {
    if (!g.is_connected()) {
        throw PreconditionError("homology: graph must be connected");
    }
    SmithDecomposition snf = smith_normal_form(intersection_matrix(g));
    HomologyDescriptor out;
    std::size_t corank = 0;
    for (const BigInt& d : snf.invariant_factors) {
        if (d == 0) {
            ++corank;
        } else if (d > 1) {
            out.torsion.push_back(d);
        }
    }
    out.free_rank = 2 * static_cast<std::size_t>(g.total_genus()) + g.betti1() + corank;
    return out;
}

} // namespace plumb
