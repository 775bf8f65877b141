#pragma once

#include <stdexcept>
#include <string>

namespace pcoh {

// Base class for every error the library raises on purpose.
// Each subclass owns a distinct message prefix so callers (and the CLI)
// can tell input problems from failed mathematical checks.
class PcohError : public std::runtime_error {
public:
    explicit PcohError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input (vectors, polytopes, matrices, kernels).
class ParseError : public PcohError {
public:
    explicit ParseError(const std::string& msg) : PcohError("parse error: " + msg) {}
};

// Two objects that must live over the same web don't.
class WebMismatchError : public PcohError {
public:
    explicit WebMismatchError(const std::string& msg)
        : PcohError("web mismatch: " + msg) {}
};

// A coordinate of a would-be unit ball is forced to 0 or unbounded,
// so the set is not a valid ball for that web.
class DegenerateCoordinateError : public PcohError {
public:
    explicit DegenerateCoordinateError(const std::string& msg)
        : PcohError("degenerate coordinate: " + msg) {}
};

// Subtraction (or another partial operation) applied outside its domain.
class PartialityError : public PcohError {
public:
    explicit PartialityError(const std::string& msg)
        : PcohError("partial operation: " + msg) {}
};

// A sum or evaluation exceeded the caller-supplied norm bound.
class BoundError : public PcohError {
public:
    explicit BoundError(const std::string& msg) : PcohError("bound exceeded: " + msg) {}
};

// An exact result would need coefficients beyond the requested truncation degree.
class TruncationError : public PcohError {
public:
    explicit TruncationError(const std::string& msg)
        : PcohError("truncation error: " + msg) {}
};

// A request exceeds a hard size cap (e.g. vertex enumeration dimension).
class SizeCapError : public PcohError {
public:
    explicit SizeCapError(const std::string& msg) : PcohError("size cap: " + msg) {}
};

// An invariant that should hold by construction was found violated
// (used by validating constructors, e.g. matrices that fail to map balls to balls).
class InvariantError : public PcohError {
public:
    explicit InvariantError(const std::string& msg)
        : PcohError("invariant violation: " + msg) {}
};

}  // namespace pcoh
