#pragma once

#include <stdexcept>

namespace wiener {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Degree list cannot be realized by any tree (sum != 2(n-1) or an entry < 1).
class NotTreeGraphicError : public Error {
public:
    using Error::Error;
};

/// Fewer than two vertices where at least two are required.
class TooSmallError : public Error {
public:
    using Error::Error;
};

/// A computation would leave the signed 64-bit range, or an input exceeds
/// the vertex cap that keeps all downstream arithmetic in range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Edge list is not a tree (wrong edge count, duplicate edge, self loop,
/// out-of-range label, or disconnected).
class InvalidTreeError : public Error {
public:
    using Error::Error;
};

/// Instance is beyond the configured size limit of the chosen algorithm.
class InstanceTooLargeError : public Error {
public:
    using Error::Error;
};

/// Operation is only defined for a specific range of spine lengths k.
class UnsupportedKError : public Error {
public:
    using Error::Error;
};

/// No index satisfies the prefix/suffix sign-change condition.
class NoPivotError : public Error {
public:
    using Error::Error;
};

/// Iterative method did not converge within the iteration budget.
class NoConvergenceError : public Error {
public:
    using Error::Error;
};

/// Malformed user-supplied text (degree lists, weight lists, tree files).
class InputError : public Error {
public:
    using Error::Error;
};

} // namespace wiener
