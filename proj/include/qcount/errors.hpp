#pragma once

#include <stdexcept>
#include <string>

namespace qcount {

// Precondition violations: out-of-range indices, invalid probabilities,
// degenerate problems.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A simulation would exceed the configured qubit cap.
class ResourceError : public std::length_error {
public:
    ResourceError(const std::string& what, unsigned requested_qubits)
        : std::length_error(what), requested_qubits_(requested_qubits) {}

    unsigned requested_qubits() const noexcept { return requested_qubits_; }

private:
    unsigned requested_qubits_;
};

} // namespace qcount
