#pragma once

// The two-parameter family
//   v = 364t + 1, u = 364t + 5,
//   A  = v(16v - u),     B  = 16(16u^2 - v^2),
//   A' = 16u^2 - v^2,    B' = 16u(16v - u),
// with w = 256u - v, so that A + B = u*w and A' + B' = v*w.

#include <optional>
#include <string>
#include <vector>

#include "dtwin/curve.hpp"
#include "dtwin/int_core.hpp"

namespace dtwin {

struct FamilyParams {
  BigInt t;
  BigInt u, v;
  BigInt A, B;
  BigInt A_prime, B_prime;
  BigInt w;

  WeierstrassModel curve() const { return frey_curve(A, B); }
  WeierstrassModel curve_prime() const { return frey_curve(A_prime, B_prime); }
};

// Throws DomainError for t < 1.
FamilyParams family_params(const BigInt& t);

// Small divisors of AB(A+B) that split it completely into O(t)-sized pieces:
// v, 16v - u, 4u - v, 4u + v, u, w.
std::vector<BigInt> family_split(const FamilyParams& p);

// The same quantities as polynomials in t.
struct FamilyPolys {
  IntPoly u, v, A, B, A_prime, B_prime, w;
};

const FamilyPolys& family_polys();

struct Witness {
  std::string label;
  BigInt value;
};

struct ConditionVerdict {
  std::string id;         // "i" ... "vii"
  std::string statement;
  bool pass = false;
  std::vector<Witness> witnesses;
};

struct ConditionReport {
  BigInt t;
  std::vector<ConditionVerdict> conditions;  // always seven, in order

  bool ok() const;
};

// Checks the seven family conditions with exact arithmetic. Condition (vii)
// is checked as strict growth of AB(A+B) from t - 1 to t. The fields of `p`
// are taken as given, so a perturbed record shows up as failed conditions.
ConditionReport verify_conditions(const FamilyParams& p);

struct IdentityCheck {
  std::string name;
  IntPoly expanded;
  IntPoly expected;
  bool pass = false;
  std::optional<std::size_t> mismatch_index;  // first differing coefficient
};

struct SymbolicReport {
  std::vector<IdentityCheck> checks;

  bool ok() const;
};

// Published closed forms the expansions are compared against.
struct ExpectedPolys {
  IntPoly sextic;          // AB(A+B) = A'B'(A'+B')
  IntPoly quartic;         // A^2 + AB + B^2
  IntPoly quartic_prime;   // A'^2 + A'B' + B'^2
  IntPoly difference;      // quartic - quartic_prime

  static ExpectedPolys published();
};

// Runs every identity and records pass/fail without throwing.
SymbolicReport symbolic_checks(const ExpectedPolys& expected =
                                   ExpectedPolys::published());

// As symbolic_checks, but throws SymbolicMismatch on the first failed check.
SymbolicReport symbolic_verify(const ExpectedPolys& expected =
                                   ExpectedPolys::published());

struct ReplayStep {
  std::string claim;
  bool pass = false;
  std::string detail;
};

struct CoprimalityReport {
  BigInt t;
  std::vector<ReplayStep> steps;

  bool ok() const;
};

// Replays the case analysis showing gcd(A, B) = 1 at a concrete t.
CoprimalityReport coprimality_case_analysis(const FamilyParams& p);

struct FamilyDiscriminant {
  BigInt value;  // A^2 B^2 (A + B)^2 / 2^8
  Factorization factorization;
};

// Throws DomainError for t < 1 and TheoremViolation if the primed and unprimed
// expressions disagree.
FamilyDiscriminant delta_min_family(const BigInt& t,
                                    std::uint64_t budget = kDefaultFactorBudget);

}  // namespace dtwin
