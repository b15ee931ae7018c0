#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gentle {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A vertex or arrow label was declared twice within its namespace.
class DuplicateLabelError : public Error {
public:
    using Error::Error;
};

/// An arrow references a vertex label that does not exist.
class UnknownEndpointError : public Error {
public:
    using Error::Error;
};

/// A relation pairs two arrows that do not compose head to tail.
class NonComposableRelationError : public Error {
public:
    using Error::Error;
};

/// The sign parity constraints admit no solution. Validated input never
/// triggers this; it guards against corrupted presentations.
class InconsistentSignsError : public Error {
public:
    using Error::Error;
};

/// Sign query on a trivial thread of the single-vertex algebra, which has
/// no incident arrow to take a sign from.
class IsolatedVertexError : public Error {
public:
    using Error::Error;
};

/// The structural matching found no partner thread. Total on validated
/// gentle input, so this signals an internal invariant breach.
class MatchFailureError : public Error {
public:
    using Error::Error;
};

/// An expansion window was requested with too small a depth to hold even
/// one full slice plus its neighbor levels.
class DepthTooSmallError : public Error {
public:
    using Error::Error;
};

/// An orbit walk stepped past the top level of its expansion window.
/// Callers retry with a larger depth.
class WindowExhaustedError : public Error {
public:
    using Error::Error;
};

/// The underlying graph does not have exactly one cycle.
class NotOneCycleError : public Error {
public:
    using Error::Error;
};

/// A computed invariant matched no classification branch, or failed a
/// cross-check that holds for every valid one-cycle gentle algebra.
class InconsistentInvariantError : public Error {
public:
    using Error::Error;
};

/// Family parameters outside the documented ranges.
class BadParametersError : public Error {
public:
    using Error::Error;
};

/// The random sampler exhausted its retry budget without producing a
/// connected finite-dimensional gentle presentation.
class GenerationFailedError : public Error {
public:
    GenerationFailedError(const std::string& msg, std::size_t attempts)
        : Error(msg), attempts_(attempts) {}

    std::size_t attempts() const { return attempts_; }

private:
    std::size_t attempts_ = 0;
};

/// Base class for errors raised while reading the quiver text format.
/// Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg), line_(line), col_(col) {}

    std::size_t line() const { return line_; }
    std::size_t col() const { return col_; }

private:
    std::size_t line_ = 0;
    std::size_t col_ = 0;
};

/// Malformed line, unknown directive, or illegal label character.
class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A declaration references a label that has not been declared yet.
class UndeclaredLabelError : public ParseError {
public:
    using ParseError::ParseError;
};

/// The same vertex, arrow, relation, or header was declared twice.
class DuplicateDeclarationError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A "cannot happen" condition was hit. Reported to users as a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace gentle
