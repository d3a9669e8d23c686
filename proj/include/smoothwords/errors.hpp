#pragma once

#include <stdexcept>
#include <string>

namespace smoothwords {

/// A precondition on an argument was violated (bad letter, height mismatch,
/// malformed chain, out-of-range parameter).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured ceiling (class height, word length, ...).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// No word of the requested kind exists.
class EmptyClassError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace smoothwords
