#include "dtwin/curve.hpp"

#include "dtwin/errors.hpp"

namespace dtwin {

namespace {

BigInt require_integer(const Rational& q, const char* name) {
  if (q.get_den() != 1)
    throw NonIntegralTransform(std::string("transformed ") + name + " = " +
                               q.get_str() + " is not an integer");
  return q.get_num();
}

}  // namespace

std::string WeierstrassModel::to_string() const {
  return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," +
         a4.get_str() + "," + a6.get_str() + "]";
}

WeierstrassModel frey_curve(const BigInt& A, const BigInt& B) {
  if (A == 0 || B == 0 || A + B == 0)
    throw SingularCurve("x(x - A)(x + B) has a repeated root for A=" +
                        A.get_str() + ", B=" + B.get_str());
  return {0, B - A, 0, -A * B, 0};
}

CurveInvariants invariants(const WeierstrassModel& m) {
  const auto& [a1, a2, a3, a4, a6] = m;
  CurveInvariants inv;
  inv.b2 = a1 * a1 + 4 * a2;
  inv.b4 = a1 * a3 + 2 * a4;
  inv.b6 = a3 * a3 + 4 * a6;
  inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  inv.c4 = inv.b2 * inv.b2 - 24 * inv.b4;
  inv.c6 = -inv.b2 * inv.b2 * inv.b2 + 36 * inv.b2 * inv.b4 - 216 * inv.b6;
  inv.disc = -inv.b2 * inv.b2 * inv.b8 - 8 * inv.b4 * inv.b4 * inv.b4 -
             27 * inv.b6 * inv.b6 + 9 * inv.b2 * inv.b4 * inv.b6;
  if (inv.disc != 0) {
    Rational j(inv.c4 * inv.c4 * inv.c4, inv.disc);
    j.canonicalize();
    inv.j = j;
  }
  return inv;
}

WeierstrassModel transform(const WeierstrassModel& m, const Rational& u,
                           const Rational& r, const Rational& s,
                           const Rational& t) {
  if (u == 0) throw DomainError("transform scale u must be nonzero");
  const Rational a1 = m.a1, a2 = m.a2, a3 = m.a3, a4 = m.a4, a6 = m.a6;
  const Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  const Rational n1 = (a1 + 2 * s) / u;
  const Rational n2 = (a2 - s * a1 + 3 * r - s * s) / u2;
  const Rational n3 = (a3 + r * a1 + 2 * t) / u3;
  const Rational n4 =
      (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4;
  const Rational n6 =
      (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  return {require_integer(n1, "a1"), require_integer(n2, "a2"),
          require_integer(n3, "a3"), require_integer(n4, "a4"),
          require_integer(n6, "a6")};
}

Rational j_invariant(const WeierstrassModel& m) {
  auto inv = invariants(m);
  if (!inv.j) throw SingularCurve("model " + m.to_string() + " is singular");
  return *inv.j;
}

void require_nonsingular(const WeierstrassModel& m) {
  if (invariants(m).disc == 0)
    throw SingularCurve("model " + m.to_string() + " is singular");
}

}  // namespace dtwin
