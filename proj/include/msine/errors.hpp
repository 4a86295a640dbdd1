#pragma once

#include <stdexcept>
#include <string>

namespace msine {

/// A direction-taking operation received the zero vector.
class ZeroVectorError : public std::invalid_argument {
public:
    explicit ZeroVectorError(const std::string& where)
        : std::invalid_argument(where + ": zero vector has no direction") {}
};

/// Invalid norm description (non-convex polygon, p < 1, too few vertices, ...).
class InvalidNormError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inputs violate an operation's precondition (collinear pair, degenerate triangle, singular map, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical search failed to meet its guaranteed outcome.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace msine
