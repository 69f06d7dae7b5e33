#ifndef PLUMB_ERRORS_HPP
#define PLUMB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace plumb {

// One parser/validator finding. line/col are 1-based; 0 means "whole
// document" (used for semantic findings in JSON input, which has no
// meaningful source position after parsing).
struct Diagnostic {
    enum class Code {
        malformed_syntax,
        duplicate_id,
        dangling_endpoint,
        negative_genus,
        self_loop,
        disconnected,
        empty_graph,
    };

    Code code;
    int line = 0;
    int col = 0;
    std::string message;
};

std::string to_string(Diagnostic::Code code);
std::string render(const Diagnostic& d);

// Thrown by parse_graph when the input document is rejected. Carries the
// full diagnostic list so callers can report every finding at once.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// Thrown when an operation's stated precondition is violated (e.g. a
// fundamental-cycle request on a graph that is not negative definite).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace plumb

#endif
