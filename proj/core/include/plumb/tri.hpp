#ifndef PLUMB_TRI_HPP
#define PLUMB_TRI_HPP

#include <string_view>

namespace plumb {

// Three-valued verdict. "unknown" is a first-class answer: it is reported
// whenever the hypotheses of the deciding criterion are not met, and is
// never silently collapsed to false.
enum class Tri { yes, no, unknown };

inline Tri tri_of(bool b) { return b ? Tri::yes : Tri::no; }

constexpr std::string_view to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        default: return "unknown";
    }
}

// Fundamental-group finiteness verdict.
enum class Pi1 { finite, infinite, unknown };

constexpr std::string_view to_string(Pi1 p) {
    switch (p) {
        case Pi1::finite: return "finite";
        case Pi1::infinite: return "infinite";
        default: return "unknown";
    }
}

} // namespace plumb

#endif
