#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dtwin {

// Argument outside an operation's domain (t <= 0, non-prime p, n == 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularCurve : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonIntegralTransform : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when the rho stage runs out of iterations. `partial` holds the pieces
// found so far (proven primes and unsplit cofactors), and `unsplit` the
// composite that could not be broken.
class FactorizationBudgetExceeded : public std::runtime_error {
 public:
  FactorizationBudgetExceeded(std::vector<mpz_class> partial, mpz_class unsplit)
      : std::runtime_error("factorization budget exhausted on " +
                           unsplit.get_str()),
        partial_(std::move(partial)),
        unsplit_(std::move(unsplit)) {}

  const std::vector<mpz_class>& partial() const noexcept { return partial_; }
  const mpz_class& unsplit() const noexcept { return unsplit_; }

 private:
  std::vector<mpz_class> partial_;
  mpz_class unsplit_;
};

class SymbolicMismatch : public std::runtime_error {
 public:
  SymbolicMismatch(std::string check, std::size_t index)
      : std::runtime_error("identity '" + check +
                           "' differs at coefficient of t^" +
                           std::to_string(index)),
        check_(std::move(check)),
        index_(index) {}

  const std::string& check() const noexcept { return check_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::string check_;
  std::size_t index_;
};

// A step of the family theorem failed on a concrete instance. Reaching this
// means the implementation (or the mathematics) is wrong.
class TheoremViolation : public std::logic_error {
 public:
  TheoremViolation(std::string step, const std::string& detail)
      : std::logic_error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dtwin
