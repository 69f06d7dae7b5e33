#include "plumb/cycles.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "plumb/lattice.hpp"

namespace plumb {

namespace {

// Laufer coefficients and the oracle's box search stay in machine
// integers; this guard keeps every intermediate pairing inside int64 with
// room to spare. Desk-scale graphs never come close.
constexpr std::int64_t kCoefficientLimit = std::int64_t{1} << 31;

void require_weights_in_range(const PlumbingGraph& g, const char* who) {
    for (const Vertex& v : g.vertices()) {
        if (v.euler <= -kCoefficientLimit || v.euler >= kCoefficientLimit) {
            throw std::invalid_argument(std::string(who) + ": Euler numbers beyond 2^31 are not supported");
        }
    }
}

} // namespace

bool Divisor::all_positive() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](std::int64_t z) { return z > 0; });
}

std::string to_string(const Divisor& z) {
    std::ostringstream os;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (i) os << ' ';
        os << z[i];
    }
    return os.str();
}

std::int64_t pair(const Divisor& z, std::size_t i, const PlumbingGraph& g) {
    if (i >= g.vertex_count()) {
        throw std::out_of_range("pair: vertex index out of range");
    }
    if (z.size() != g.vertex_count()) {
        throw std::invalid_argument("pair: divisor length does not match vertex count");
    }
    std::int64_t value = z[i] * g.vertex(i).euler;
    for (std::size_t nb : g.neighbors(i)) {
        value += z[nb];
    }
    return value;
}

Divisor fundamental_cycle(const PlumbingGraph& g, IncrementOrder order) {
    if (!g.is_connected()) {
        throw PreconditionError("fundamental_cycle: graph must be connected");
    }
    if (!is_negative_definite(intersection_matrix(g))) {
        throw PreconditionError("fundamental_cycle: intersection form must be negative definite");
    }
    require_weights_in_range(g, "fundamental_cycle");

    const std::size_t n = g.vertex_count();
    Divisor z{std::vector<std::int64_t>(n, 1)};

    // Negative definiteness bounds the fixed point, so the cap is a bug
    // tripwire rather than a tuning knob.
    std::size_t budget = 1'000'000;
    for (;;) {
        bool bumped = false;
        if (order == IncrementOrder::lowest_index) {
            for (std::size_t i = 0; i < n && !bumped; ++i) {
                if (pair(z, i, g) > 0) {
                    ++z.coefficients[i];
                    bumped = true;
                }
            }
        } else {
            for (std::size_t i = n; i-- > 0 && !bumped;) {
                if (pair(z, i, g) > 0) {
                    ++z.coefficients[i];
                    bumped = true;
                }
            }
        }
        if (!bumped) break;
        if (--budget == 0) {
            throw std::runtime_error("fundamental_cycle: iteration budget exhausted");
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (pair(z, i, g) > 0) {
            throw std::logic_error("fundamental_cycle: fixed point fails Z.E_i <= 0");
        }
    }
    return z;
}

namespace {

// Shared depth-first search over the box 1 <= z_i <= cap_i. Returns the
// first solution in lexicographic order, which for a min-closed candidate
// set is its componentwise minimum.
//
// Pruning: after assigning a coordinate, every pairing it touches is
// re-bounded optimistically (unassigned own coefficient at its most
// negative, unassigned neighbors at 1). A positive lower bound kills the
// branch; once all variables of a pairing are assigned the bound is the
// exact value, so surviving leaves are exactly the candidates.
struct BoxSearch {
    const PlumbingGraph& g;
    std::size_t n;
    std::vector<std::int64_t> euler;
    std::vector<std::vector<std::size_t>> neighbors;  // with multiplicity
    std::vector<std::vector<std::size_t>> touching;   // pairings containing coordinate d

    explicit BoxSearch(const PlumbingGraph& graph)
        : g(graph), n(graph.vertex_count()), neighbors(n), touching(n) {
        euler.reserve(n);
        for (const Vertex& v : g.vertices()) euler.push_back(v.euler);
        for (std::size_t v = 0; v < n; ++v) neighbors[v] = g.neighbors(v);
        for (std::size_t d = 0; d < n; ++d) {
            touching[d].push_back(d);
            for (std::size_t nb : neighbors[d]) {
                if (std::find(touching[d].begin(), touching[d].end(), nb) == touching[d].end()) {
                    touching[d].push_back(nb);
                }
            }
        }
    }

    bool satisfied(const std::vector<std::int64_t>& z, std::size_t v) const {
        std::int64_t value = euler[v] * z[v];
        for (std::size_t nb : neighbors[v]) value += z[nb];
        return value <= 0;
    }

    std::optional<std::vector<std::int64_t>> first(const std::vector<std::int64_t>& caps) const {
        std::vector<std::int64_t> z(n, 0);
        if (descend(z, 0, caps)) return z;
        return std::nullopt;
    }

private:
    bool plausible(const std::vector<std::int64_t>& z, std::size_t assigned_through,
                   const std::vector<std::int64_t>& caps, std::size_t v) const {
        std::int64_t lower;
        if (v <= assigned_through) {
            lower = euler[v] * z[v];
        } else {
            lower = euler[v] * (euler[v] > 0 ? 1 : caps[v]);
        }
        for (std::size_t nb : neighbors[v]) {
            lower += nb <= assigned_through ? z[nb] : 1;
        }
        return lower <= 0;
    }

    bool descend(std::vector<std::int64_t>& z, std::size_t depth, const std::vector<std::int64_t>& caps) const {
        if (depth == n) return true;
        for (std::int64_t value = 1; value <= caps[depth]; ++value) {
            z[depth] = value;
            bool ok = true;
            for (std::size_t v : touching[depth]) {
                if (!plausible(z, depth, caps, v)) {
                    ok = false;
                    break;
                }
            }
            if (ok && descend(z, depth + 1, caps)) return true;
        }
        z[depth] = 0;
        return false;
    }
};

} // namespace

std::optional<Divisor> brute_force_min_cycle(const PlumbingGraph& g, int bound) {
    if (bound < 1) {
        throw std::invalid_argument("brute_force_min_cycle: bound must be positive");
    }
    if (!g.is_connected()) {
        throw PreconditionError("brute_force_min_cycle: graph must be connected");
    }
    require_weights_in_range(g, "brute_force_min_cycle");

    BoxSearch search(g);
    const std::size_t n = g.vertex_count();
    std::vector<std::int64_t> caps(n, bound);

    auto lex_min = search.first(caps);
    if (!lex_min) return std::nullopt;

    // The lexicographic minimum equals the componentwise minimum when the
    // candidate set is min-closed. Probe each coordinate for a smaller
    // candidate; any hit both improves the running minimum and flags that
    // closure needs re-checking against the final vector.
    std::vector<std::int64_t> minimum = *lex_min;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (minimum[j] <= 1) continue;
            std::vector<std::int64_t> probe_caps(n, bound);
            probe_caps[j] = minimum[j] - 1;
            if (auto hit = search.first(probe_caps)) {
                for (std::size_t k = 0; k < n; ++k) {
                    minimum[k] = std::min(minimum[k], (*hit)[k]);
                }
                improved = true;
            }
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        if (!search.satisfied(minimum, v)) {
            throw std::logic_error("brute_force_min_cycle: candidate set is not closed under componentwise min");
        }
    }
    return Divisor{std::move(minimum)};
}

RationalityCertificate rationality(const PlumbingGraph& g) {
    RationalityCertificate cert;
    cert.fundamental_cycle = fundamental_cycle(g);

    BigInt self_intersection = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        self_intersection += BigInt(cert.fundamental_cycle[i]) * pair(cert.fundamental_cycle, i, g);
    }
    BigInt artin = self_intersection;
    bool all_rational_curves = true;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const Vertex& v = g.vertex(i);
        artin += BigInt(cert.fundamental_cycle[i]) * (2 * BigInt(v.genus) - 2 - v.euler);
        if (v.genus != 0) all_rational_curves = false;
    }
    if (artin % 2 != 0) {
        throw std::logic_error("rationality: arithmetic-genus value must be even");
    }

    cert.self_intersection = std::move(self_intersection);
    cert.artin_value = std::move(artin);
    cert.is_rational = all_rational_curves && cert.artin_value == -2;
    return cert;
}

} // namespace plumb
