#pragma once

#include <array>
#include <optional>
#include <string>

#include "dtwin/int_core.hpp"

namespace dtwin {

// y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 with integral coefficients.
// Singular coefficient sets are representable; callers that need a curve
// check the discriminant.
struct WeierstrassModel {
  BigInt a1, a2, a3, a4, a6;

  static WeierstrassModel from_array(const std::array<BigInt, 5>& a) {
    return {a[0], a[1], a[2], a[3], a[4]};
  }
  std::array<BigInt, 5> ainvs() const { return {a1, a2, a3, a4, a6}; }
  std::string to_string() const;  // "[a1,a2,a3,a4,a6]"

  friend bool operator==(const WeierstrassModel&,
                         const WeierstrassModel&) = default;
};

struct CurveInvariants {
  BigInt b2, b4, b6, b8;
  BigInt c4, c6;
  BigInt disc;
  std::optional<Rational> j;  // empty when disc == 0
};

// x(x - A)(x + B) = x^3 + (B - A)x^2 - AB x. Throws SingularCurve when
// AB(A + B) == 0.
WeierstrassModel frey_curve(const BigInt& A, const BigInt& B);

CurveInvariants invariants(const WeierstrassModel& m);

// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t. Throws NonIntegralTransform if any
// resulting coefficient is not an integer and DomainError if u == 0.
WeierstrassModel transform(const WeierstrassModel& m, const Rational& u,
                           const Rational& r, const Rational& s,
                           const Rational& t);

// Throws SingularCurve when disc == 0.
Rational j_invariant(const WeierstrassModel& m);

// Throws SingularCurve when disc == 0.
void require_nonsingular(const WeierstrassModel& m);

}  // namespace dtwin
