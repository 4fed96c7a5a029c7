#pragma once

#include <stdexcept>
#include <string>

namespace mapcanon {

/// Malformed input syntax (JSON or edge-list text).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input that violates a graph invariant
/// (duplicate edge, self-loop, index out of range, bad weight).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Iterative eigensolver exceeded its sweep budget.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical precondition violated (non-unit vector, non-orthonormal basis).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force enumeration requested beyond its size limit.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Randomized generator could not satisfy its postcondition within budget.
struct GeneratorError : std::runtime_error {
    explicit GeneratorError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mapcanon
