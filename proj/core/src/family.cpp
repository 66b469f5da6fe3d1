#include "dtwin/family.hpp"

#include <algorithm>

#include "dtwin/errors.hpp"

namespace dtwin {

namespace {

// No domain check; t = 0 is used for the growth comparison at t = 1.
FamilyParams raw_params(const BigInt& t) {
  FamilyParams p;
  p.t = t;
  p.v = 364 * t + 1;
  p.u = 364 * t + 5;
  p.A = p.v * (16 * p.v - p.u);
  p.B = 16 * (16 * p.u * p.u - p.v * p.v);
  p.A_prime = 16 * p.u * p.u - p.v * p.v;
  p.B_prime = 16 * p.u * (16 * p.v - p.u);
  p.w = 256 * p.u - p.v;
  return p;
}

BigInt frey_key(const BigInt& a, const BigInt& b) { return a * b * (a + b); }

BigInt mod(const BigInt& a, unsigned long m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), BigInt(m).get_mpz_t());
  return r;
}

IdentityCheck compare(std::string name, IntPoly expanded, IntPoly expected) {
  IdentityCheck c{std::move(name), std::move(expanded), std::move(expected),
                  false, std::nullopt};
  const std::size_t len = static_cast<std::size_t>(
      std::max(c.expanded.degree(), c.expected.degree()) + 1);
  for (std::size_t i = 0; i < len; ++i) {
    if (c.expanded.coeff(i) != c.expected.coeff(i)) {
      c.mismatch_index = i;
      break;
    }
  }
  c.pass = !c.mismatch_index.has_value();
  return c;
}

// Coefficient-wise signs, compared against all ones.
IdentityCheck positivity(std::string name, const IntPoly& f) {
  std::vector<BigInt> signs, ones;
  for (const auto& c : f.coeffs()) {
    signs.emplace_back(sgn(c));
    ones.emplace_back(1);
  }
  return compare(std::move(name), IntPoly(signs), IntPoly(ones));
}

}  // namespace

FamilyParams family_params(const BigInt& t) {
  if (t < 1)
    throw DomainError("family parameter t must be >= 1, got " + t.get_str());
  FamilyParams p = raw_params(t);
  if (p.A + p.B != p.u * p.w || p.A_prime + p.B_prime != p.v * p.w)
    throw TheoremViolation("family_params", "sum identities fail at t=" +
                                                t.get_str());
  return p;
}

std::vector<BigInt> family_split(const FamilyParams& p) {
  return {p.v, 16 * p.v - p.u, 4 * p.u - p.v, 4 * p.u + p.v, p.u, p.w};
}

const FamilyPolys& family_polys() {
  static const FamilyPolys polys = [] {
    FamilyPolys f;
    f.v = IntPoly::linear(364, 1);
    f.u = IntPoly::linear(364, 5);
    const IntPoly sixteen = IntPoly::constant(16);
    f.A = f.v * (sixteen * f.v - f.u);
    f.A_prime = sixteen * f.u * f.u - f.v * f.v;
    f.B = sixteen * f.A_prime;
    f.B_prime = sixteen * f.u * (sixteen * f.v - f.u);
    f.w = IntPoly::constant(256) * f.u - f.v;
    return f;
  }();
  return polys;
}

bool ConditionReport::ok() const {
  return conditions.size() == 7 &&
         std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionVerdict& c) { return c.pass; });
}

ConditionReport verify_conditions(const FamilyParams& p) {
  ConditionReport rep;
  rep.t = p.t;
  auto& out = rep.conditions;

  const BigInt key = frey_key(p.A, p.B);
  const BigInt key_prime = frey_key(p.A_prime, p.B_prime);
  out.push_back({"i", "AB(A+B) = A'B'(A'+B')", key == key_prime,
                 {{"AB(A+B)", key}, {"A'B'(A'+B')", key_prime}}});

  const BigInt q = p.A * p.A + p.A * p.B + p.B * p.B;
  const BigInt q_prime = p.A_prime * p.A_prime + p.A_prime * p.B_prime +
                         p.B_prime * p.B_prime;
  out.push_back({"ii", "A^2+AB+B^2 != A'^2+A'B'+B'^2", q != q_prime,
                 {{"A^2+AB+B^2", q}, {"A'^2+A'B'+B'^2", q_prime}}});

  const bool nonzero_b = p.B != 0 && p.B_prime != 0;
  const unsigned vb = nonzero_b ? p_adic_valuation(p.B, 2) : 0;
  const unsigned vb_prime = nonzero_b ? p_adic_valuation(p.B_prime, 2) : 0;
  out.push_back({"iii", "ord_2(B) = 4 = ord_2(B')",
                 nonzero_b && vb == 4 && vb_prime == 4,
                 {{"ord_2(B)", vb}, {"ord_2(B')", vb_prime}}});

  const BigInt ra = mod(p.A, 4), ra_prime = mod(p.A_prime, 4);
  out.push_back({"iv", "A = -1 mod 4 and A' = -1 mod 4",
                 ra == 3 && ra_prime == 3,
                 {{"A mod 4", ra}, {"A' mod 4", ra_prime}}});

  const BigInt g = gcd(p.A, p.B);
  out.push_back({"v", "gcd(A, B) = 1", g == 1, {{"gcd(A,B)", g}}});

  const BigInt g_prime = gcd(p.A_prime, p.B_prime);
  out.push_back(
      {"vi", "gcd(A', B') = 1", g_prime == 1, {{"gcd(A',B')", g_prime}}});

  const FamilyParams prev = raw_params(p.t - 1);
  const BigInt key_prev = frey_key(prev.A, prev.B);
  out.push_back({"vii", "AB(A+B) strictly increases from t-1 to t",
                 key > key_prev,
                 {{"AB(A+B) at t-1", key_prev}, {"AB(A+B) at t", key}}});
  return rep;
}

ExpectedPolys ExpectedPolys::published() {
  ExpectedPolys e;
  e.sextic = IntPoly({BigInt("449082480"), BigInt("516389304704"),
                      BigInt("207018434558208"), BigInt("36219784702087168"),
                      BigInt("3118842418505748480"),
                      BigInt("130710551904763084800"),
                      BigInt("2135261074938421248000")});
  e.quartic = IntPoly({BigInt("40825801"), BigInt("11819759952"),
                       BigInt("1274643054048"), BigInt("60689835198720"),
                       BigInt("1078327546732800")});
  e.quartic_prime = IntPoly({BigInt("1284721"), BigInt("1177870512"),
                             BigInt("354967118688"), BigInt("34906855576320"),
                             BigInt("1078327546732800")});
  e.difference = IntPoly({BigInt("39541080"), BigInt("10641889440"),
                          BigInt("919675935360"), BigInt("25782979622400")});
  return e;
}

bool SymbolicReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

SymbolicReport symbolic_checks(const ExpectedPolys& expected) {
  const FamilyPolys& f = family_polys();
  const IntPoly sixteen = IntPoly::constant(16);
  SymbolicReport rep;
  auto& c = rep.checks;

  // Pre-splitting identities used by the factoring fast path.
  c.push_back(compare("A+B = u*w", f.A + f.B, f.u * f.w));
  c.push_back(compare("A'+B' = v*w", f.A_prime + f.B_prime, f.v * f.w));
  c.push_back(compare("A = v*(16v-u)", f.A, f.v * (sixteen * f.v - f.u)));
  const IntPoly four_u = IntPoly::constant(4) * f.u;
  c.push_back(
      compare("A' = (4u-v)*(4u+v)", f.A_prime, (four_u - f.v) * (four_u + f.v)));
  c.push_back(compare("B = 16*(4u-v)*(4u+v)", f.B,
                      sixteen * (four_u - f.v) * (four_u + f.v)));
  c.push_back(compare("B' = 16*u*(16v-u)", f.B_prime,
                      sixteen * f.u * (sixteen * f.v - f.u)));
  c.push_back(compare("16v-u = 15v-4", sixteen * f.v - f.u,
                      IntPoly::constant(15) * f.v - IntPoly::constant(4)));
  c.push_back(compare("w = 92820t+1279", f.w, IntPoly::linear(92820, 1279)));

  // Products and quadratic forms against the published expansions.
  const IntPoly key = f.A * f.B * (f.A + f.B);
  const IntPoly key_prime = f.A_prime * f.B_prime * (f.A_prime + f.B_prime);
  c.push_back(compare("AB(A+B) = sextic", key, expected.sextic));
  c.push_back(compare("A'B'(A'+B') = sextic", key_prime, expected.sextic));
  const IntPoly q = f.A * f.A + f.A * f.B + f.B * f.B;
  const IntPoly q_prime = f.A_prime * f.A_prime + f.A_prime * f.B_prime +
                          f.B_prime * f.B_prime;
  c.push_back(compare("A^2+AB+B^2 = quartic", q, expected.quartic));
  c.push_back(
      compare("A'^2+A'B'+B'^2 = quartic'", q_prime, expected.quartic_prime));
  c.push_back(compare("quartic - quartic' = cubic", q - q_prime,
                      expected.difference));
  c.push_back(positivity("cubic coefficients positive", q - q_prime));
  c.push_back(positivity("sextic coefficients positive", key));

  // Congruences holding for every integer t.
  c.push_back(compare("A mod 4 = 3", f.A.mod(4), IntPoly::constant(3)));
  c.push_back(compare("A' mod 4 = 3", f.A_prime.mod(4), IntPoly::constant(3)));
  c.push_back(compare("B mod 16 = 0", f.B.mod(16), IntPoly()));
  c.push_back(compare("B' mod 16 = 0", f.B_prime.mod(16), IntPoly()));
  c.push_back(
      compare("B/16 mod 2 = 1", f.B.divided_by(16).mod(2), IntPoly::constant(1)));
  c.push_back(compare("B'/16 mod 2 = 1", f.B_prime.divided_by(16).mod(2),
                      IntPoly::constant(1)));
  return rep;
}

SymbolicReport symbolic_verify(const ExpectedPolys& expected) {
  SymbolicReport rep = symbolic_checks(expected);
  for (const auto& c : rep.checks)
    if (!c.pass) throw SymbolicMismatch(c.name, *c.mismatch_index);
  return rep;
}

bool CoprimalityReport::ok() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const ReplayStep& s) { return s.pass; });
}

CoprimalityReport coprimality_case_analysis(const FamilyParams& p) {
  CoprimalityReport rep;
  rep.t = p.t;
  auto step = [&](std::string claim, bool pass, std::string detail) {
    rep.steps.push_back({std::move(claim), pass, std::move(detail)});
  };

  const BigInt guv = gcd(p.u, p.v);
  step("gcd(u, v) = 1", guv == 1 && p.u - p.v == 4 && mod(p.u, 2) == 1 &&
                            mod(p.v, 2) == 1,
       "u - v = " + BigInt(p.u - p.v).get_str() + ", gcd = " + guv.get_str());

  // A common odd prime of A = v(16v - u) and B = 16(16u^2 - v^2) cannot divide
  // v (it would then divide u); if it divides 16v - u, then
  // 16u^2 - v^2 = (16^3 - 1) v^2 mod p.
  const BigInt m = 16 * p.v - p.u;
  const BigInt residue_gap = 16 * p.u * p.u - p.v * p.v - 4095 * p.v * p.v;
  step("16u^2 - v^2 = 4095 v^2 mod (16v - u)",
       mpz_divisible_p(residue_gap.get_mpz_t(), m.get_mpz_t()) != 0,
       "16v - u = " + m.get_str());

  const Factorization f4095 = factor(BigInt(4095));
  const Factorization expected{1, {{3, 2}, {5, 1}, {7, 1}, {13, 1}}, true};
  step("16^3 - 1 = 4095 = 3^2 * 5 * 7 * 13",
       BigInt(16 * 16 * 16 - 1) == 4095 && f4095 == expected,
       f4095.to_string());

  const BigInt fifteen_v = 15 * p.v - 4;
  step("16v - u = 15v - 4", m == fifteen_v,
       m.get_str() + " = 15*" + p.v.get_str() + " - 4");

  const BigInt r3 = mod(fifteen_v, 3), r5 = mod(fifteen_v, 5);
  step("15v - 4 = -4 = 2 mod 3", r3 == 2, "residue " + r3.get_str());
  step("15v - 4 = -4 = 1 mod 5", r5 == 1, "residue " + r5.get_str());

  const BigInt r7 = mod(fifteen_v, 7), r13 = mod(fifteen_v, 13);
  step("15v - 4 = 11 mod 7", r7 == mod(BigInt(11), 7),
       "residue " + r7.get_str());
  step("15v - 4 = 11 mod 13", r13 == 11, "residue " + r13.get_str());

  const BigInt g = gcd(p.A, p.B), g_prime = gcd(p.A_prime, p.B_prime);
  step("gcd(A, B) = 1", g == 1, "gcd = " + g.get_str());
  step("gcd(A', B') = 1", g_prime == 1, "gcd = " + g_prime.get_str());
  return rep;
}

FamilyDiscriminant delta_min_family(const BigInt& t, std::uint64_t budget) {
  const FamilyParams p = family_params(t);
  FactorOptions fo;
  fo.budget = budget;

  // AB(A+B)/16 = v (16v - u) (4u - v)(4u + v) u w.
  Factorization root{1, {}, true};
  BigInt root_value = 1;
  for (const BigInt& piece : family_split(p)) {
    root = merge(root, factor(piece, fo));
    root_value *= piece;
  }

  FamilyDiscriminant out;
  out.value = root_value * root_value;
  out.factorization = merge(root, root);

  const BigInt key = frey_key(p.A, p.B);
  const BigInt key_prime = frey_key(p.A_prime, p.B_prime);
  if (key * key != out.value * 256 || key_prime * key_prime != out.value * 256)
    throw TheoremViolation("delta_min_family",
                           "A^2B^2(A+B)^2/2^8 disagrees with the split product "
                           "at t=" + t.get_str());
  if (out.factorization.value() != out.value)
    throw TheoremViolation("delta_min_family", "factorization does not "
                                               "reassemble the value");
  return out;
}

}  // namespace dtwin
