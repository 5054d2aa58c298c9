#pragma once

#include <stdexcept>
#include <string>

namespace purebetti {

// Raised when an operation's precondition on its mathematical input fails.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a computed result contradicts a proven identity.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace purebetti
