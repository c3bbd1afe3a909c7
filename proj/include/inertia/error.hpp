#pragma once

#include <stdexcept>
#include <string>

namespace inertia {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed value: non-monotone switch list, parameter out of range, overflow.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Text input (waveforms, JSON, config) that cannot be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parameters violate the consistency condition, so the request has no solution.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside the domain where its statement holds.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A request would exceed a fixed resource cap (oracle horizon, event count).
class ResourceError : public Error {
public:
    using Error::Error;
};

}  // namespace inertia
