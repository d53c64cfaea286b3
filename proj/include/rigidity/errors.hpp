#pragma once

#include <stdexcept>
#include <string>

namespace rigidity {

/// Invalid user input: malformed diagram, non-dominant weight, bad marking.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (weight table size, matrix dimension) was hit.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check failed (Jacobi identity, homomorphism, d∘d = 0). Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rigidity
