#include "plumb/errors.hpp"

#include <sstream>

namespace plumb {

std::string to_string(Diagnostic::Code code) {
    switch (code) {
        case Diagnostic::Code::malformed_syntax: return "malformed-syntax";
        case Diagnostic::Code::duplicate_id: return "duplicate-id";
        case Diagnostic::Code::dangling_endpoint: return "dangling-endpoint";
        case Diagnostic::Code::negative_genus: return "negative-genus";
        case Diagnostic::Code::self_loop: return "self-loop";
        case Diagnostic::Code::disconnected: return "disconnected";
        case Diagnostic::Code::empty_graph: return "empty-graph";
    }
    return "unknown";
}

std::string render(const Diagnostic& d) {
    std::ostringstream os;
    if (d.line > 0) {
        os << d.line << ':' << d.col << ": ";
    }
    os << to_string(d.code) << ": " << d.message;
    return os.str();
}

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
    std::ostringstream os;
    os << diagnostics.size() << (diagnostics.size() == 1 ? " error" : " errors");
    if (!diagnostics.empty()) {
        os << "; first: " << render(diagnostics.front());
    }
    return os.str();
}

} // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

} // namespace plumb
