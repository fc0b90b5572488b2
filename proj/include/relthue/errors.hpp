#pragma once

#include <stdexcept>
#include <string>

namespace relthue {

/** m has a square factor, so it does not define a distinct quadratic field. */
struct NotSquareFreeError : std::domain_error {
    explicit NotSquareFreeError(const std::string& what) : std::domain_error(what) {}
};

/** m must be a positive integer (the fields handled here are Q(i*sqrt(m)), m >= 1). */
struct NonPositiveError : std::domain_error {
    explicit NonPositiveError(const std::string& what) : std::domain_error(what) {}
};

/** Two elements from rings with different m were combined. */
struct RingMismatchError : std::invalid_argument {
    explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/** The parameter t makes the family member reducible; no form exists there. */
struct ReducibleParameterError : std::domain_error {
    explicit ReducibleParameterError(const std::string& what) : std::domain_error(what) {}
};

/** Dualizing t would land on a reducible parameter. */
struct DualParameterReducibleError : std::domain_error {
    explicit DualParameterReducibleError(const std::string& what) : std::domain_error(what) {}
};

/** Root refinement hit its subdivision cap before reaching the requested width. */
struct PrecisionExhaustedError : std::runtime_error {
    explicit PrecisionExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

/** Two root enclosures could not be separated; gap statistics would be vacuous. */
struct IndistinguishableRootsError : std::runtime_error {
    explicit IndistinguishableRootsError(const std::string& what) : std::runtime_error(what) {}
};

/** A case's absolute inequality is neither covered by a cited solution list nor searched. */
struct UnresolvedCaseError : std::runtime_error {
    explicit UnresolvedCaseError(const std::string& what) : std::runtime_error(what) {}
};

/** A ray's residual polynomial degenerated; cannot happen for irreducible forms. */
struct DegenerateRayError : std::runtime_error {
    explicit DegenerateRayError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relthue
