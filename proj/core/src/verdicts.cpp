#include "plumb/verdicts.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "plumb/graph_io.hpp"

namespace plumb {

namespace anchors {

// Theorem anchors quoted by the verdict chain.
constexpr const char* milnor_fillable =
    "a closed oriented 3-manifold is Milnor fillable iff it is plumbed on a negative-definite graph";
constexpr const char* universally_tight =
    "Milnor fillable contact structures are universally tight";
constexpr const char* artin_criterion =
    "Artin criterion: rational iff every curve is CP^1 and Z.Z + sum z_i(-e_i-2) = -2";
constexpr const char* rational_lspace =
    "the link of a rational surface singularity is an L-space";
constexpr const char* lspace_taut =
    "a rational homology sphere Seifert fibered over S^2 is an L-space iff it carries no taut foliation";
constexpr const char* quotient_pi1 =
    "a singularity link has finite fundamental group iff the singularity is a quotient singularity";
constexpr const char* small_sfs_atoroidal =
    "small Seifert fibered spaces and lens spaces are atoroidal";

// Computations and standard results outside the quoted chain.
constexpr const char* connectivity = "computed: graph connectivity";
constexpr const char* sylvester = "computed: exact leading-principal-minor signs";
constexpr const char* laufer = "computed: Laufer iteration for the fundamental cycle";
constexpr const char* not_a_link = "not Milnor fillable, hence not a singularity link";
constexpr const char* seifert_shape =
    "computed: star/chain plumbing is Seifert fibered over S^2; nonzero determinant gives a rational homology sphere";
constexpr const char* toroidal_witness = "computed: essential torus witness (node skeleton or positive-genus base)";
constexpr const char* pi1_external = "external: Seifert base-orbifold trichotomy and homology rank";
constexpr const char* homology_external =
    "external: homology presentation of a plumbed 3-manifold by its intersection matrix";
constexpr const char* insufficient = "hypotheses of the quoted criteria not met";
constexpr const char* conjunct_failed = "computed: a required conjunct fails definitively";

} // namespace anchors

namespace {

Tri tri_from_pi1(Pi1 p) {
    switch (p) {
        case Pi1::finite: return Tri::yes;
        case Pi1::infinite: return Tri::no;
        default: return Tri::unknown;
    }
}

} // namespace

VerdictReport analyze(const PlumbingGraph& g) {
    VerdictReport r;

    const bool connected = g.is_connected();
    r.connected = {connected, {anchors::connectivity}};

    bool negative_definite = false;
    if (g.vertex_count() > 0) {
        negative_definite = is_negative_definite(intersection_matrix(g));
    }
    r.negative_definite = {negative_definite, {anchors::sylvester}};

    const bool fillable = connected && negative_definite;
    r.milnor_fillable = {fillable, {anchors::milnor_fillable}};
    r.canonical_structure_universally_tight = {fillable, {anchors::universally_tight}};

    r.rational = {false, {anchors::not_a_link}};
    r.l_space = {Tri::unknown, {anchors::insufficient}};
    r.taut_foliation_excluded = {Tri::unknown, {anchors::insufficient}};
    r.seifert_over_s2 = {Tri::unknown, {anchors::insufficient}};
    r.atoroidal = {Tri::unknown, {anchors::insufficient}};
    r.pi1 = {Pi1::unknown, {anchors::insufficient}};
    r.quotient_link = {Tri::unknown, {anchors::insufficient}};
    r.etnyre_counterexample = {Tri::unknown, {anchors::insufficient}};

    if (connected) {
        r.homology = homology(g);

        JsjSkeleton skeleton = jsj_skeleton(g);
        VerdictReport::JsjSummary jsj;
        jsj.known = skeleton.known;
        jsj.nodes = skeleton.pieces.size();
        jsj.tori = skeleton.tori.size();
        jsj.trivial = skeleton.is_trivial;
        jsj.minimality_verified = std::all_of(skeleton.tori.begin(), skeleton.tori.end(),
                                              [](const auto& t) { return t.minimality_verified; });
        jsj.diagnostic = skeleton.diagnostic;
        r.jsj = std::move(jsj);
    }

    if (fillable) {
        RationalityCertificate cert = rationality(g);
        r.fundamental_cycle = cert.fundamental_cycle;
        r.self_intersection = cert.self_intersection;
        r.artin_value = cert.artin_value;
        r.rational = {cert.is_rational, {anchors::laufer, anchors::artin_criterion}};

        GraphShape shape = classify_shape(g);
        const bool seifert_shape_ok = shape.kind == GraphShape::Kind::single_vertex ||
                                      shape.kind == GraphShape::Kind::chain ||
                                      shape.kind == GraphShape::Kind::star;
        if (seifert_shape_ok && g.total_genus() == 0) {
            // Negative definiteness already forces a nonzero determinant.
            r.seifert_over_s2 = {Tri::yes, {anchors::seifert_shape}};
        } else if (g.total_genus() > 0 && shape.kind != GraphShape::Kind::cyclic) {
            r.seifert_over_s2 = {Tri::no, {anchors::seifert_shape}};
        } else if (shape.kind == GraphShape::Kind::multi_node && is_reduced(g)) {
            r.seifert_over_s2 = {Tri::no, {anchors::seifert_shape}};
        }

        try {
            r.seifert = seifert_data(g);
        } catch (const PreconditionError&) {
            // Shape or reduced-form hypotheses fail; no Seifert payload.
        }

        Pi1 pi1 = pi1_is_finite(g);
        r.pi1 = {pi1, {anchors::pi1_external}};
        r.quotient_link = {tri_from_pi1(pi1), {anchors::quotient_pi1}};

        Tri atoroidal = is_atoroidal(g);
        switch (atoroidal) {
            case Tri::yes:
                r.atoroidal = {Tri::yes, {anchors::small_sfs_atoroidal}};
                break;
            case Tri::no:
                r.atoroidal = {Tri::no, {anchors::toroidal_witness}};
                break;
            default:
                break;  // keep the unknown default
        }

        if (cert.is_rational) {
            r.l_space = {Tri::yes, {anchors::rational_lspace}};
        }
        if (r.l_space.value == Tri::yes && r.seifert_over_s2.value == Tri::yes) {
            r.taut_foliation_excluded = {Tri::yes, {anchors::lspace_taut}};
        }

        const bool tight = r.canonical_structure_universally_tight.value;
        if (r.taut_foliation_excluded.value == Tri::yes && r.atoroidal.value == Tri::yes &&
            pi1 == Pi1::infinite && tight) {
            r.etnyre_counterexample = {Tri::yes,
                                       {anchors::universally_tight, anchors::rational_lspace,
                                        anchors::lspace_taut, anchors::small_sfs_atoroidal}};
        } else if (pi1 == Pi1::finite || r.atoroidal.value == Tri::no ||
                   r.taut_foliation_excluded.value == Tri::no || !tight) {
            r.etnyre_counterexample = {Tri::no, {anchors::conjunct_failed}};
        }
    }

    std::vector<std::string> violations = audit(r);
    if (!violations.empty()) {
        throw std::logic_error("analyze: verdict audit failed: " + violations.front());
    }
    return r;
}

std::vector<std::string> audit(const VerdictReport& r) {
    std::vector<std::string> violations;

    if (r.milnor_fillable.value != (r.connected.value && r.negative_definite.value)) {
        violations.push_back("milnor_fillable must equal connected AND negative_definite");
    }
    if (r.canonical_structure_universally_tight.value != r.milnor_fillable.value) {
        violations.push_back("canonical_structure_universally_tight must equal milnor_fillable");
    }
    if (r.rational.value && r.l_space.value != Tri::yes) {
        violations.push_back("rational implies l_space == true");
    }
    if (r.l_space.value == Tri::yes && r.seifert_over_s2.value == Tri::yes &&
        r.taut_foliation_excluded.value != Tri::yes) {
        violations.push_back("l_space AND seifert_over_s2 imply taut_foliation_excluded");
    }
    if (r.milnor_fillable.value && r.quotient_link.value != tri_from_pi1(r.pi1.value)) {
        violations.push_back("quotient_link must track pi1 finiteness on Milnor fillable links");
    }
    const bool chain_holds = r.taut_foliation_excluded.value == Tri::yes &&
                             r.atoroidal.value == Tri::yes && r.pi1.value == Pi1::infinite &&
                             r.canonical_structure_universally_tight.value;
    if ((r.etnyre_counterexample.value == Tri::yes) != chain_holds) {
        violations.push_back(
            "etnyre_counterexample == true iff taut excluded, atoroidal, infinite pi1 and universal tightness");
    }
    return violations;
}

namespace {

nlohmann::json json_int(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::json flag_json(const Verdict<bool>& v) {
    return {{"value", v.value}, {"provenance", v.provenance}};
}

nlohmann::json flag_json(const Verdict<Tri>& v) {
    return {{"value", std::string(to_string(v.value))}, {"provenance", v.provenance}};
}

nlohmann::json flag_json(const Verdict<Pi1>& v) {
    return {{"value", std::string(to_string(v.value))}, {"provenance", v.provenance}};
}

std::string homology_text(const HomologyDescriptor& h) {
    std::ostringstream os;
    if (h.finite()) {
        os << "|H1| = " << h.torsion_order();
    } else {
        os << "free rank " << h.free_rank;
    }
    os << " (torsion";
    if (h.torsion.empty()) {
        os << " none";
    } else {
        for (const BigInt& t : h.torsion) os << ' ' << t;
    }
    os << ", free rank " << h.free_rank << ")";
    return os.str();
}

std::string jsj_text(const VerdictReport::JsjSummary& j) {
    if (!j.known) return "unknown: " + j.diagnostic;
    std::ostringstream os;
    os << (j.trivial ? "trivial" : "nontrivial") << " (" << j.nodes << (j.nodes == 1 ? " node, " : " nodes, ")
       << j.tori << (j.tori == 1 ? " torus" : " tori") << ")";
    if (j.tori > 0 && !j.minimality_verified) os << " [unverified minimality]";
    return os.str();
}

} // namespace

std::string report_render(const VerdictReport& r, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json flags;
        flags["connected"] = flag_json(r.connected);
        flags["negative_definite"] = flag_json(r.negative_definite);
        flags["milnor_fillable"] = flag_json(r.milnor_fillable);
        flags["canonical_structure_universally_tight"] =
            flag_json(r.canonical_structure_universally_tight);
        flags["rational"] = flag_json(r.rational);
        flags["l_space"] = flag_json(r.l_space);
        flags["taut_foliation_excluded"] = flag_json(r.taut_foliation_excluded);
        flags["seifert_over_s2"] = flag_json(r.seifert_over_s2);
        flags["atoroidal"] = flag_json(r.atoroidal);
        flags["pi1"] = flag_json(r.pi1);
        flags["quotient_link"] = flag_json(r.quotient_link);
        flags["etnyre_counterexample"] = flag_json(r.etnyre_counterexample);

        nlohmann::json payloads = nlohmann::json::object();
        if (r.fundamental_cycle) {
            payloads["fundamental_cycle"] = r.fundamental_cycle->coefficients;
        }
        if (r.self_intersection) payloads["self_intersection"] = json_int(*r.self_intersection);
        if (r.artin_value) payloads["artin_value"] = json_int(*r.artin_value);
        if (r.seifert) {
            nlohmann::json fibers = nlohmann::json::array();
            for (const Rational& f : r.seifert->exceptional()) {
                fibers.push_back({{"beta", json_int(rational_num(f))}, {"alpha", json_int(rational_den(f))}});
            }
            payloads["seifert"] = {{"e0", r.seifert->e0()},
                                   {"base_genus", r.seifert->base_genus()},
                                   {"fibers", fibers}};
        }
        if (r.homology) {
            nlohmann::json torsion = nlohmann::json::array();
            for (const BigInt& t : r.homology->torsion) torsion.push_back(json_int(t));
            payloads["homology"] = {
                {"free_rank", r.homology->free_rank},
                {"torsion", torsion},
                {"order", r.homology->finite() ? json_int(r.homology->torsion_order())
                                               : nlohmann::json(nullptr)},
                {"provenance", anchors::homology_external}};
        }
        if (r.jsj) {
            nlohmann::json jsj = {{"known", r.jsj->known},
                                  {"nodes", r.jsj->nodes},
                                  {"tori", r.jsj->tori},
                                  {"trivial", r.jsj->trivial},
                                  {"minimality_verified", r.jsj->minimality_verified}};
            if (!r.jsj->diagnostic.empty()) jsj["diagnostic"] = r.jsj->diagnostic;
            payloads["jsj"] = jsj;
        }

        nlohmann::json doc = {{"schema_version", 1}, {"flags", flags}, {"payloads", payloads}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    auto line = [&os](std::string_view name, std::string_view value, const std::vector<std::string>& prov) {
        os << std::left << std::setw(40) << name << std::setw(10) << value;
        for (std::size_t i = 0; i < prov.size(); ++i) {
            if (i) os << "; ";
            os << prov[i];
        }
        os << '\n';
    };
    auto bool_str = [](bool b) { return b ? "true" : "false"; };

    line("connected", bool_str(r.connected.value), r.connected.provenance);
    line("negative_definite", bool_str(r.negative_definite.value), r.negative_definite.provenance);
    line("milnor_fillable", bool_str(r.milnor_fillable.value), r.milnor_fillable.provenance);
    line("canonical_structure_universally_tight",
         bool_str(r.canonical_structure_universally_tight.value),
         r.canonical_structure_universally_tight.provenance);
    line("rational", bool_str(r.rational.value), r.rational.provenance);
    line("l_space", to_string(r.l_space.value), r.l_space.provenance);
    line("taut_foliation_excluded", to_string(r.taut_foliation_excluded.value),
         r.taut_foliation_excluded.provenance);
    line("seifert_over_s2", to_string(r.seifert_over_s2.value), r.seifert_over_s2.provenance);
    line("atoroidal", to_string(r.atoroidal.value), r.atoroidal.provenance);
    line("pi1", to_string(r.pi1.value), r.pi1.provenance);
    line("quotient_link", to_string(r.quotient_link.value), r.quotient_link.provenance);
    line("etnyre_counterexample", to_string(r.etnyre_counterexample.value),
         r.etnyre_counterexample.provenance);

    if (r.fundamental_cycle || r.homology || r.seifert || r.jsj) {
        os << "payloads:\n";
        if (r.fundamental_cycle) {
            os << "  fundamental_cycle   " << to_string(*r.fundamental_cycle) << '\n';
        }
        if (r.self_intersection) os << "  self_intersection   " << *r.self_intersection << '\n';
        if (r.artin_value) os << "  artin_value         " << *r.artin_value << '\n';
        if (r.seifert) os << "  seifert             " << to_string(*r.seifert) << '\n';
        if (r.homology) {
            os << "  homology            " << homology_text(*r.homology) << "  [" << anchors::homology_external
               << "]\n";
        }
        if (r.jsj) os << "  jsj                 " << jsj_text(*r.jsj) << '\n';
    }
    return os.str();
}

std::string canonical_encoding(const PlumbingGraph& g) {
    if (g.vertex_count() > 0 && g.is_connected()) {
        GraphShape shape = classify_shape(g);
        std::ostringstream os;
        if (shape.kind == GraphShape::Kind::single_vertex) {
            const Vertex& v = g.vertex(0);
            os << "single(e=" << v.euler;
            if (v.genus > 0) os << ",g=" << v.genus;
            os << ')';
            return os.str();
        }
        if (shape.kind == GraphShape::Kind::chain) {
            std::vector<std::int64_t> weights;
            // A chain read end to end; the smaller of the two readings is
            // the canonical one.
            std::size_t endpoint = 0;
            for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                if (g.degree(i) == 1) {
                    endpoint = i;
                    break;
                }
            }
            {
                std::size_t prev = endpoint;
                std::size_t cur = endpoint;
                weights.push_back(g.vertex(cur).euler);
                while (weights.size() < g.vertex_count()) {
                    for (std::size_t nb : g.neighbors(cur)) {
                        if (nb != prev) {
                            prev = cur;
                            cur = nb;
                            break;
                        }
                    }
                    weights.push_back(g.vertex(cur).euler);
                }
            }
            std::vector<std::int64_t> reversed(weights.rbegin(), weights.rend());
            const std::vector<std::int64_t>& canonical = std::min(weights, reversed);
            os << "chain(";
            for (std::size_t i = 0; i < canonical.size(); ++i) {
                if (i) os << ',';
                os << canonical[i];
            }
            os << ')';
            return os.str();
        }
        if (shape.kind == GraphShape::Kind::star) {
            std::vector<std::vector<std::int64_t>> legs;
            for (const auto& leg : shape.legs) {
                std::vector<std::int64_t> weights;
                for (std::size_t v : leg) weights.push_back(g.vertex(v).euler);
                legs.push_back(std::move(weights));
            }
            std::sort(legs.begin(), legs.end());
            os << "star(" << g.vertex(*shape.center).euler << ';';
            for (std::size_t l = 0; l < legs.size(); ++l) {
                if (l) os << '|';
                os << '[';
                for (std::size_t i = 0; i < legs[l].size(); ++i) {
                    if (i) os << ',';
                    os << legs[l][i];
                }
                os << ']';
            }
            os << ')';
            return os.str();
        }
    }
    return "dsl:" + emit_graph(g, GraphFormat::dsl);
}

std::vector<std::string> known_predicates() {
    return {"any",
            "milnor_fillable",
            "universally_tight",
            "rational",
            "l_space",
            "taut_foliation_excluded",
            "seifert_over_s2",
            "atoroidal",
            "quotient_link",
            "etnyre_counterexample",
            "pi1_finite",
            "pi1_infinite"};
}

namespace {

std::function<bool(const VerdictReport&)> predicate_matcher(const std::string& name) {
    if (name == "any") return [](const VerdictReport&) { return true; };
    if (name == "milnor_fillable") return [](const VerdictReport& r) { return r.milnor_fillable.value; };
    if (name == "universally_tight") {
        return [](const VerdictReport& r) { return r.canonical_structure_universally_tight.value; };
    }
    if (name == "rational") return [](const VerdictReport& r) { return r.rational.value; };
    if (name == "l_space") return [](const VerdictReport& r) { return r.l_space.value == Tri::yes; };
    if (name == "taut_foliation_excluded") {
        return [](const VerdictReport& r) { return r.taut_foliation_excluded.value == Tri::yes; };
    }
    if (name == "seifert_over_s2") {
        return [](const VerdictReport& r) { return r.seifert_over_s2.value == Tri::yes; };
    }
    if (name == "atoroidal") return [](const VerdictReport& r) { return r.atoroidal.value == Tri::yes; };
    if (name == "quotient_link") {
        return [](const VerdictReport& r) { return r.quotient_link.value == Tri::yes; };
    }
    if (name == "etnyre_counterexample") {
        return [](const VerdictReport& r) { return r.etnyre_counterexample.value == Tri::yes; };
    }
    if (name == "pi1_finite") return [](const VerdictReport& r) { return r.pi1.value == Pi1::finite; };
    if (name == "pi1_infinite") return [](const VerdictReport& r) { return r.pi1.value == Pi1::infinite; };
    throw std::invalid_argument("unknown predicate: " + name);
}

PlumbingGraph make_chain(const std::vector<std::int64_t>& weights) {
    std::vector<Vertex> vertices;
    std::vector<PlumbingGraph::Edge> edges;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        vertices.push_back({"e" + std::to_string(i + 1), 0, weights[i]});
        if (i) edges.emplace_back(i - 1, i);
    }
    return PlumbingGraph(std::move(vertices), std::move(edges));
}

// Every weight tuple of the given length, lexicographically.
void each_tuple(std::int64_t lo, std::int64_t hi, std::size_t length,
                std::vector<std::int64_t>& tuple,
                const std::function<void(const std::vector<std::int64_t>&)>& fn) {
    if (tuple.size() == length) {
        fn(tuple);
        return;
    }
    for (std::int64_t w = lo; w <= hi; ++w) {
        tuple.push_back(w);
        each_tuple(lo, hi, length, tuple, fn);
        tuple.pop_back();
    }
}

} // namespace

SearchResult enumerate(const SearchSpec& spec) {
    if (spec.max_vertices < 1) {
        throw std::invalid_argument("enumerate: max_vertices must be >= 1");
    }
    if (spec.euler_min > spec.euler_max || spec.euler_min < -20 || spec.euler_max > -1) {
        throw std::invalid_argument("enumerate: euler range must sit inside [-20, -1]");
    }
    auto matches = predicate_matcher(spec.predicate);

    SearchResult result;
    auto consider = [&](PlumbingGraph graph) {
        ++result.generated;
        VerdictReport report = analyze(graph);
        if (matches(report)) {
            std::string encoding = canonical_encoding(graph);
            result.hits.push_back({std::move(graph), std::move(encoding), std::move(report)});
        }
    };

    if (spec.stars) {
        // k = 0: the bare central vertex.
        for (std::int64_t e0 = spec.euler_min; e0 <= spec.euler_max; ++e0) {
            consider(make_star(e0, {}));
        }

        if (spec.max_vertices >= 4) {
            const std::size_t budget = spec.max_vertices - 1;

            // Leg pool in lexicographic-by-(content) order; multisets of
            // legs are generated non-decreasing against this order, which
            // makes each isomorphism signature appear exactly once.
            std::vector<std::vector<std::int64_t>> pool;
            for (std::size_t len = 1; len <= budget; ++len) {
                std::vector<std::int64_t> tuple;
                each_tuple(spec.euler_min, spec.euler_max, len, tuple,
                           [&pool](const std::vector<std::int64_t>& t) { pool.push_back(t); });
            }
            std::sort(pool.begin(), pool.end());

            std::vector<std::vector<std::int64_t>> legs;
            std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                                       std::size_t used) {
                if (legs.size() >= 3) {
                    for (std::int64_t e0 = spec.euler_min; e0 <= spec.euler_max; ++e0) {
                        consider(make_star(e0, legs));
                    }
                }
                for (std::size_t i = start; i < pool.size(); ++i) {
                    if (used + pool[i].size() > budget) continue;
                    legs.push_back(pool[i]);
                    choose(i, used + pool[i].size());
                    legs.pop_back();
                }
            };
            choose(0, 0);
        }
    }

    if (spec.chains) {
        for (std::size_t n = 2; n <= spec.max_vertices; ++n) {
            std::vector<std::int64_t> tuple;
            each_tuple(spec.euler_min, spec.euler_max, n, tuple,
                       [&](const std::vector<std::int64_t>& w) {
                           std::vector<std::int64_t> reversed(w.rbegin(), w.rend());
                           if (w <= reversed) consider(make_chain(w));
                       });
        }
    }

    std::sort(result.hits.begin(), result.hits.end(),
              [](const SearchResult::Hit& a, const SearchResult::Hit& b) { return a.encoding < b.encoding; });
    if (result.hits.size() > spec.cap) {
        result.hits.resize(spec.cap);
        result.truncated = true;
    }
    return result;
}

} // namespace plumb
