// Error taxonomy shared by the library and the CLI.
#pragma once

#include <stdexcept>
#include <string>

namespace wbu {

// Malformed textual input (germ polynomials, weight lists, quotient literals).
// `position` is a 0-based offset into the offending string when known, -1 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, long position = -1)
        : std::runtime_error(msg), position_(position) {}
    long position() const { return position_; }

private:
    long position_;
};

// Structurally well-formed input that violates a documented precondition
// (non-positive weights, zero group order, germ without isolated singularity, ...).
class InvalidInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The analysis reached a local model outside the catalogue of shapes this
// toolkit can certify.  Callers should treat the result as "unknown", never
// as a silent pass or fail.
class UnsupportedShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked 64-bit arithmetic overflowed.  All published invariants fit
// comfortably in int64 for the supported input ranges, so hitting this
// indicates inputs far outside the design envelope.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Cross-checked invariants disagree (e.g. a Noether-style degree count came
// out non-integral).  Indicates an internal bug or an input outside the
// validity region of the closed formulas; never ignored.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wbu
