#pragma once

#include <stdexcept>
#include <string>

namespace nsalg {

/// Malformed textual input (rationals, generator syntax, element grammar, JSON).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid module specification (dimension mismatch, bad window keys, ...).
class SpecError : public std::runtime_error {
public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation would leave the materialized degree slice of a truncated module.
/// Raised instead of silently dropping terms; the caller must raise the cap.
class TruncationOverflow : public std::runtime_error {
public:
    explicit TruncationOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Operation on parity-mixed input that requires homogeneous arguments.
class ParityError : public std::runtime_error {
public:
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically undefined request (degree of zero, prime of the zero vector, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation's stated precondition does not hold for the given input.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A degree-lowering step produced a degree different from the predicted one.
/// Never expected to fire; carries the step where prediction and reality split.
class ClaimViolation : public std::runtime_error {
public:
    explicit ClaimViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace nsalg
