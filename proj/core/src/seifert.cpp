#include "plumb/seifert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "plumb/lattice.hpp"

namespace plumb {

namespace {

BigInt rational_floor(const Rational& r) {
    BigInt num = rational_num(r);
    BigInt den = rational_den(r);  // > 0 by normalization
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

std::int64_t to_int64(const BigInt& v, const char* who) {
    if (v < std::numeric_limits<std::int64_t>::min() || v > std::numeric_limits<std::int64_t>::max()) {
        throw std::invalid_argument(std::string(who) + ": value out of machine range");
    }
    return v.convert_to<std::int64_t>();
}

} // namespace

ContinuedFractionChain::ContinuedFractionChain(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
        throw std::invalid_argument("ContinuedFractionChain: empty chain");
    }
    for (std::int64_t t : terms_) {
        if (t > -2) {
            throw std::invalid_argument("ContinuedFractionChain: every term must be <= -2");
        }
    }
}

ContinuedFractionChain negative_cf(const Rational& r) {
    if (r >= -1) {
        throw std::invalid_argument("negative_cf: argument must be < -1");
    }
    std::vector<std::int64_t> terms;
    Rational x = r;
    for (;;) {
        BigInt a = rational_floor(x);
        terms.push_back(to_int64(a, "negative_cf"));
        if (x == Rational(a)) break;
        // x = a - 1/x'  =>  x' = 1/(a - x), and a - x in (-1, 0) keeps
        // x' < -1, so every later term is <= -2 as well.
        x = Rational(1) / (Rational(a) - x);
    }
    return ContinuedFractionChain(std::move(terms));
}

Rational cf_eval(const ContinuedFractionChain& chain) {
    const auto& terms = chain.terms();
    Rational value = terms.back();
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        if (value == 0) {
            throw std::logic_error("cf_eval: zero tail value");
        }
        value = Rational(terms[i]) - Rational(1) / value;
    }
    return value;
}

namespace {

std::vector<std::size_t> sorted_neighbors(const PlumbingGraph& g, std::size_t v) {
    std::vector<std::size_t> nbs = g.neighbors(v);
    std::sort(nbs.begin(), nbs.end());
    return nbs;
}

bool is_node(const PlumbingGraph& g, std::size_t v) {
    return g.degree(v) >= 3 || g.vertex(v).genus > 0;
}

// Walk away from `from` starting into `first` until a leaf or a node.
// Returns the chain of interior vertices walked (leaf included, node
// excluded) and, when the walk ends at a node, that node's index.
struct Walk {
    std::vector<std::size_t> chain;
    std::optional<std::size_t> node;
};

Walk walk_away(const PlumbingGraph& g, std::size_t from, std::size_t first) {
    Walk walk;
    std::size_t prev = from;
    std::size_t cur = first;
    for (;;) {
        if (is_node(g, cur)) {
            walk.node = cur;
            return walk;
        }
        walk.chain.push_back(cur);
        if (g.degree(cur) == 1) {
            return walk;
        }
        // degree 2, not a node: step to the neighbor we did not come from
        const auto& nbs = g.neighbors(cur);
        std::size_t next = (nbs[0] == prev) ? nbs[1] : nbs[0];
        prev = cur;
        cur = next;
    }
}

// All chains hanging off `center`, one per neighbor in index order.
std::vector<std::vector<std::size_t>> chains_from(const PlumbingGraph& g, std::size_t center) {
    std::vector<std::vector<std::size_t>> legs;
    for (std::size_t nb : sorted_neighbors(g, center)) {
        Walk walk = walk_away(g, center, nb);
        legs.push_back(std::move(walk.chain));
    }
    return legs;
}

} // namespace

GraphShape classify_shape(const PlumbingGraph& g) {
    if (!g.is_connected()) {
        throw PreconditionError("classify_shape: graph must be connected");
    }
    GraphShape shape;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (is_node(g, i)) shape.nodes.push_back(i);
    }
    if (g.betti1() > 0) {
        shape.kind = GraphShape::Kind::cyclic;
        return shape;
    }
    if (g.vertex_count() == 1) {
        shape.kind = GraphShape::Kind::single_vertex;
        return shape;
    }
    std::size_t branch_vertices = 0;
    std::size_t branch = 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (g.degree(i) >= 3) {
            ++branch_vertices;
            branch = i;
        }
    }
    const bool all_genus_zero = g.total_genus() == 0;
    if (branch_vertices == 0 && all_genus_zero) {
        shape.kind = GraphShape::Kind::chain;
        return shape;
    }
    if (branch_vertices == 1 && all_genus_zero) {
        shape.kind = GraphShape::Kind::star;
        shape.center = branch;
        shape.legs = chains_from(g, branch);
        return shape;
    }
    shape.kind = GraphShape::Kind::multi_node;
    return shape;
}

SeifertData::SeifertData(std::int64_t e0, std::vector<Rational> exceptional_fibers, int base_genus)
    : e0_(e0), exceptional_(std::move(exceptional_fibers)), base_genus_(base_genus) {
    if (base_genus_ < 0) {
        throw std::invalid_argument("SeifertData: negative base genus");
    }
    for (const Rational& r : exceptional_) {
        if (r <= 0 || r >= 1) {
            throw std::invalid_argument("SeifertData: exceptional fibers must lie in (0,1)");
        }
    }
    std::sort(exceptional_.begin(), exceptional_.end());
}

std::vector<BigInt> SeifertData::alphas() const {
    std::vector<BigInt> out;
    out.reserve(exceptional_.size());
    for (const Rational& r : exceptional_) out.push_back(rational_den(r));
    return out;
}

std::string to_string(const SeifertData& s) {
    std::ostringstream os;
    os << "Y(" << s.e0();
    if (s.base_genus() > 0) os << "; g=" << s.base_genus();
    os << ";";
    bool first = true;
    for (const Rational& r : s.exceptional()) {
        os << (first ? " " : ", ") << rational_num(r) << '/' << rational_den(r);
        first = false;
    }
    if (first) os << ' ';
    os << ')';
    return os.str();
}

namespace {

std::vector<std::int64_t> leg_weights(const PlumbingGraph& g, const std::vector<std::size_t>& leg) {
    std::vector<std::int64_t> weights;
    weights.reserve(leg.size());
    for (std::size_t v : leg) weights.push_back(g.vertex(v).euler);
    return weights;
}

bool legs_reduced(const PlumbingGraph& g, const std::vector<std::vector<std::size_t>>& legs) {
    for (const auto& leg : legs) {
        for (std::size_t v : leg) {
            if (g.vertex(v).euler > -2) return false;
        }
    }
    return true;
}

} // namespace

SeifertData seifert_data(const PlumbingGraph& g) {
    GraphShape shape = classify_shape(g);

    std::size_t center = 0;
    switch (shape.kind) {
        case GraphShape::Kind::single_vertex:
            return SeifertData(g.vertex(0).euler, {}, g.vertex(0).genus);
        case GraphShape::Kind::chain:
            center = 0;  // first declared vertex; at most two directions
            break;
        case GraphShape::Kind::star:
            center = *shape.center;
            break;
        default:
            throw PreconditionError("seifert_data: graph is not a star, chain or single vertex");
    }

    std::vector<Rational> fibers;
    for (const auto& leg : chains_from(g, center)) {
        std::vector<std::int64_t> weights = leg_weights(g, leg);
        for (std::int64_t w : weights) {
            if (w > -2) {
                throw PreconditionError(
                    "seifert_data: leg contains a weight > -2 (graph is not in reduced form)");
            }
        }
        Rational surgery = cf_eval(ContinuedFractionChain(std::move(weights)));
        fibers.push_back(Rational(-1) / surgery);  // surgery < -1, so this is in (0,1)
    }
    return SeifertData(g.vertex(center).euler, std::move(fibers), 0);
}

Rational orbifold_euler(const SeifertData& s) {
    Rational e = s.e0();
    for (const Rational& r : s.exceptional()) e += r;
    return e;
}

namespace {

void require_link(const PlumbingGraph& g, const char* who) {
    if (!g.is_connected()) {
        throw PreconditionError(std::string(who) + ": graph must be connected");
    }
    if (!is_negative_definite(intersection_matrix(g))) {
        throw PreconditionError(std::string(who) + ": intersection form must be negative definite");
    }
}

} // namespace

bool is_reduced(const PlumbingGraph& g) {
    for (const Vertex& v : g.vertices()) {
        if (v.genus == 0 && v.euler > -2) return false;
    }
    return true;
}

Pi1 pi1_is_finite(const PlumbingGraph& g) {
    require_link(g, "pi1_is_finite");
    if (g.total_genus() > 0) return Pi1::infinite;  // free homology rank >= 2g

    GraphShape shape = classify_shape(g);
    switch (shape.kind) {
        case GraphShape::Kind::cyclic:
            return Pi1::infinite;  // b1 of the graph gives free homology rank
        case GraphShape::Kind::single_vertex:
        case GraphShape::Kind::chain:
            return Pi1::finite;  // lens space; |H1| = |det| is finite here
        case GraphShape::Kind::star: {
            if (!legs_reduced(g, shape.legs)) {
                // A -1 in a leg can hide a blow-up of a smaller link, so no
                // conclusion can be read off the raw leg count.
                return Pi1::unknown;
            }
            if (shape.legs.size() >= 4) {
                // Four or more exceptional fibers: the base orbifold is
                // Euclidean or hyperbolic, never spherical.
                return Pi1::infinite;
            }
            SeifertData data = seifert_data(g);
            Rational reciprocal_sum = 0;
            for (const BigInt& alpha : data.alphas()) {
                reciprocal_sum += Rational(1, alpha);
            }
            return reciprocal_sum > 1 ? Pi1::finite : Pi1::infinite;
        }
        case GraphShape::Kind::multi_node:
            return is_reduced(g) ? Pi1::infinite : Pi1::unknown;
    }
    return Pi1::unknown;
}

JsjSkeleton jsj_skeleton(const PlumbingGraph& g) {
    JsjSkeleton out;
    if (!g.is_connected()) {
        out.known = false;
        out.diagnostic = "graph is not connected";
        return out;
    }
    if (g.betti1() > 0) {
        out.known = false;
        out.diagnostic = "graph contains a cycle; torus skeleton is only computed for trees";
        return out;
    }

    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        if (is_node(g, i)) nodes.push_back(i);
    }
    out.is_trivial = nodes.size() <= 1;

    for (std::size_t node : nodes) {
        JsjSkeleton::Piece piece{node, {}};
        for (std::size_t nb : sorted_neighbors(g, node)) {
            Walk walk = walk_away(g, node, nb);
            if (walk.node) {
                if (node < *walk.node) {
                    out.tori.push_back({node, *walk.node, walk.chain, !walk.chain.empty()});
                }
            } else {
                piece.legs.push_back(std::move(walk.chain));
            }
        }
        out.pieces.push_back(std::move(piece));
    }
    return out;
}

Tri is_atoroidal(const PlumbingGraph& g) {
    require_link(g, "is_atoroidal");
    GraphShape shape = classify_shape(g);
    if (shape.kind == GraphShape::Kind::cyclic) {
        return Tri::unknown;
    }
    if (shape.nodes.empty()) {
        return Tri::yes;  // chain or single genus-0 vertex: a lens space
    }
    if (shape.nodes.size() == 1) {
        if (g.vertex(shape.nodes.front()).genus > 0) {
            return Tri::no;  // vertical torus over the positive-genus base
        }
        // Sole node of genus 0 on a tree: the star case.
        if (shape.legs.size() == 3) {
            return Tri::yes;  // at most 3 exceptional fibers: small or lens
        }
        return legs_reduced(g, shape.legs) ? Tri::no : Tri::unknown;
    }
    return is_reduced(g) ? Tri::no : Tri::unknown;
}

} // namespace plumb
