#pragma once

#include <stdexcept>
#include <string>

namespace hom3lie {

/// Malformed input: dimension mismatch, index out of range, singular
/// equivalence witness, unknown CLI flag. Exit code 2 at the CLI boundary.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation failed (non-morphism twist map,
/// intertwining failure, ...). The message names the violated condition and a
/// witness tuple. Reported as a mathematical violation, exit code 1.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Problem-file loading failure: syntax errors, unbound parameters, violated
/// NONZERO conditions. Exit code 2.
struct LoadError : std::runtime_error {
    explicit LoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Expression syntax error; offset is the byte position in the source text.
struct ParseError : LoadError {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : LoadError(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace hom3lie
