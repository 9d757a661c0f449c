#pragma once

#include <stdexcept>
#include <string>

namespace kleshchev {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad user input: malformed text, violated preconditions on arguments.
class InputError : public Error {
public:
    using Error::Error;
};

enum class ParseErrorKind { NonInteger, IncreasingParts, NonPositivePart, Malformed };

class ParseError : public InputError {
public:
    ParseError(ParseErrorKind kind, const std::string& what)
        : InputError(what), kind_(kind) {}
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

/// A precondition on a mathematical object failed (e.g. "not e-restricted").
class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

/// A mathematical invariant the implementation relies on did not hold.
/// Seeing one of these means a bug (or a wrong convention), never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

class InexactDivision : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

class OverflowError : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

/// The structural property of an optimal-sequence expansion failed.
class ConventionViolation : public InvariantViolation {
public:
    using InvariantViolation::InvariantViolation;
};

} // namespace kleshchev
