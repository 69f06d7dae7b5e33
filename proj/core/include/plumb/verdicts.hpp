#ifndef PLUMB_VERDICTS_HPP
#define PLUMB_VERDICTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumb/cycles.hpp"
#include "plumb/graph.hpp"
#include "plumb/lattice.hpp"
#include "plumb/seifert.hpp"
#include "plumb/tri.hpp"

namespace plumb {

// A verdict value plus the anchors that justify it. Anchors name the
// deciding theorem or computation; anchors prefixed "external:" mark
// standard results that sit outside the certified implication chain.
template <typename T>
struct Verdict {
    T value{};
    std::vector<std::string> provenance;
};

// Certificate of derived properties for one plumbing graph. The flag
// semantics are pinned by these implications, which audit() re-checks on
// every report:
//   milnor_fillable  == connected && negative_definite
//   universally_tight == milnor_fillable
//   rational          => l_space == yes
//   l_space == yes && seifert_over_s2 == yes => taut_foliation_excluded == yes
//   quotient_link     == (pi1 == finite) whenever milnor_fillable
//   etnyre_counterexample == yes iff taut_foliation_excluded == yes &&
//       atoroidal == yes && pi1 == infinite && universally_tight
struct VerdictReport {
    Verdict<bool> connected;
    Verdict<bool> negative_definite;
    Verdict<bool> milnor_fillable;
    Verdict<bool> canonical_structure_universally_tight;
    Verdict<bool> rational;
    Verdict<Tri> l_space;
    Verdict<Tri> taut_foliation_excluded;
    Verdict<Tri> seifert_over_s2;
    Verdict<Tri> atoroidal;
    Verdict<Pi1> pi1;
    Verdict<Tri> quotient_link;
    Verdict<Tri> etnyre_counterexample;

    std::optional<Divisor> fundamental_cycle;
    std::optional<BigInt> self_intersection;
    std::optional<BigInt> artin_value;
    std::optional<SeifertData> seifert;
    std::optional<HomologyDescriptor> homology;

    struct JsjSummary {
        bool known = false;
        std::size_t nodes = 0;
        std::size_t tori = 0;
        bool trivial = true;
        bool minimality_verified = true;
        std::string diagnostic;
    };
    std::optional<JsjSummary> jsj;
};

// Full verdict pipeline. Never throws on graph content: disconnected or
// non-negative-definite input yields milnor_fillable == false with every
// downstream tristate unknown. Runs audit() before returning and throws
// std::logic_error if any pinned implication fails (which would be a bug,
// not an input property).
VerdictReport analyze(const PlumbingGraph& g);

// Re-checks the pinned implications; returns one message per violation,
// empty when the report is consistent.
std::vector<std::string> audit(const VerdictReport& r);

enum class ReportFormat { json, text };

// JSON form conforms to schemas/verdict-report.schema.json (including the
// mandatory schema_version field); text form lists flag, value and
// provenance one per line, then the payloads. Unknown renders as
// "unknown", never as false.
std::string report_render(const VerdictReport& r, ReportFormat format);

// Stable dedup key: stars are keyed on (center weight, sorted leg weight
// tuples), chains on the lexicographically smaller of the weight sequence
// and its reverse, everything else on the canonical DSL serialization.
std::string canonical_encoding(const PlumbingGraph& g);

// Bounded search over generated links.
struct SearchSpec {
    std::size_t max_vertices = 1;
    std::int64_t euler_min = -4;
    std::int64_t euler_max = -1;
    bool stars = true;    // star-shaped trees, including the single vertex
    bool chains = false;  // linear graphs with >= 2 vertices
    std::string predicate = "etnyre_counterexample";
    std::size_t cap = 1000;
};

// Names accepted by SearchSpec::predicate. Boolean flags match their
// value; tristate flags match only a definite yes ("pi1_finite" /
// "pi1_infinite" match the definite group verdicts, "any" matches all).
std::vector<std::string> known_predicates();

struct SearchResult {
    struct Hit {
        PlumbingGraph graph;
        std::string encoding;
        VerdictReport report;
    };

    std::vector<Hit> hits;  // canonical-encoding order
    bool truncated = false;
    std::size_t generated = 0;

    bool operator==(const SearchResult&) const = delete;
};

// Generates every graph of the allowed shapes within the bounds (each
// isomorphism class once, via canonical-form generation), analyzes them,
// and returns the hits sorted by canonical encoding. Deterministic:
// identical spec, identical result. Throws std::invalid_argument if the
// spec violates max_vertices >= 1 or euler range outside [-20, -1].
SearchResult enumerate(const SearchSpec& spec);

} // namespace plumb

#endif
