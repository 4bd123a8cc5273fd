#pragma once

#include <stdexcept>
#include <string>

namespace ezeta {

// Invalid parameter or argument outside the supported domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A series fails its convergence gate; the message names the failing prefix.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Two sequence values coincide where the construction needs simple poles.
class DegenerateSequenceError : public std::runtime_error {
public:
    explicit DegenerateSequenceError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver (root finder) failed to converge.
class IterationError : public std::runtime_error {
public:
    explicit IterationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ezeta
