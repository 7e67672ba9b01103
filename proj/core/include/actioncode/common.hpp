#ifndef ACTIONCODE_COMMON_HPP
#define ACTIONCODE_COMMON_HPP

#include <stdexcept>
#include <string>

namespace actioncode {

// Thrown when an input object violates its invariants (bad pmf, cyclic
// graph, dimension mismatch, malformed file, ...).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request is well-formed but cannot be satisfied, e.g. no
// action policy fits the cost budget.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a simulation would exceed the desk-scale enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
inline constexpr double kProbSum = 1e-12;    // pmf normalization slack
inline constexpr double kProbSkip = 1e-15;   // conditioning events below this are skipped
inline constexpr double kEntropy = 1e-9;     // slack for entropy identities
inline constexpr double kCapacity = 1e-9;    // slack for capacity comparisons
}  // namespace tol

}  // namespace actioncode

#endif
