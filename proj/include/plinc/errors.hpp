#pragma once

#include <stdexcept>
#include <string>

namespace plinc {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (k < 3, zero polynomial, ...).
class domain_error : public error {
public:
    using error::error;
};

/// Geometrically degenerate input: coincident points, identical lines,
/// singular map, overlapping collinear segments.
class degenerate_error : public error {
public:
    using error::error;
};

/// Scalar-kind violation: mixing Q(sqrt(m1)) with Q(sqrt(m2)), or implicit
/// exact/float arithmetic.
class kind_error : public error {
public:
    using error::error;
};

/// Requested exact construction not representable in the supported fields.
class unsupported_error : public error {
public:
    using error::error;
};

/// Malformed serialized scalar, configuration or pattern.
class parse_error : public error {
public:
    using error::error;
};

} // namespace plinc
