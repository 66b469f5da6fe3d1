#pragma once

// Exact integer kernel: gcd, valuations, primality, factorization and dense
// univariate polynomials with big-integer coefficients.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dtwin {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt gcd(const BigInt& a, const BigInt& b);

// Largest e with p^e | n. Throws DomainError if n == 0 or p is not prime.
unsigned p_adic_valuation(const BigInt& n, const BigInt& p);

// Above this bound the Miller-Rabin base set {2, ..., 41} is no longer known
// to be deterministic and is_prime falls back to random bases.
BigInt deterministic_primality_bound();

struct PrimalityResult {
  bool prime = false;
  // false when the answer came from random bases (error < 2^-128).
  bool proven = true;

  explicit operator bool() const noexcept { return prime; }
};

PrimalityResult is_prime(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // primes strictly increasing
  bool proven = true;               // every prime certified deterministically

  BigInt value() const;
  BigInt radical() const;
  bool is_one() const noexcept { return sign == 1 && factors.empty(); }
  unsigned exponent_of(const BigInt& p) const;
  std::string to_string() const;  // "-1 * 2^4 * 3^3", "1"

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.sign == b.sign && a.factors == b.factors;
  }
};

inline constexpr std::uint64_t kDefaultFactorBudget = 10'000'000;
inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

struct FactorOptions {
  // Total rho iterations allowed across all cofactors.
  std::uint64_t budget = kDefaultFactorBudget;
  // Known (not necessarily prime, not necessarily coprime) divisors of n used
  // to pre-split it before generic factoring.
  std::vector<BigInt> hints;
};

// Throws DomainError for n == 0 and FactorizationBudgetExceeded when rho runs
// out of iterations.
Factorization factor(const BigInt& n, const FactorOptions& opts = {});

// Multiplies two factorizations exponent-wise.
Factorization merge(const Factorization& a, const Factorization& b);

// Dense polynomial in one variable, coefficients in ascending degree.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(const BigInt& c);
  static IntPoly monomial(const BigInt& c, std::size_t degree);
  // a*t + b
  static IntPoly linear(const BigInt& a, const BigInt& b);

  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  // Zero beyond the stored degree.
  BigInt coeff(std::size_t i) const;

  BigInt eval(const BigInt& x) const;
  std::string to_string(const std::string& var = "t") const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const BigInt& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Exact division of every coefficient by c; throws DomainError when some
  // coefficient is not divisible.
  IntPoly divided_by(const BigInt& c) const;
  // Coefficients reduced into [0, m).
  IntPoly mod(const BigInt& m) const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

enum class PolyOp { kAdd, kSub, kMul };

IntPoly poly_arith(PolyOp op, const IntPoly& f, const IntPoly& g);
BigInt poly_eval(const IntPoly& f, const BigInt& x);

}  // namespace dtwin
