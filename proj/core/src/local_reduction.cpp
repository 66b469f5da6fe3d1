#include "dtwin/local_reduction.hpp"

#include <algorithm>
#include <limits>

#include "dtwin/errors.hpp"

namespace dtwin {

namespace {

constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

unsigned val(const BigInt& n, const BigInt& p) {
  if (n == 0) return kInfiniteValuation;
  return static_cast<unsigned>(
      mpz_remove(BigInt().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

bool divides(const BigInt& d, const BigInt& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt invmod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("no inverse of " + a.get_str() + " mod " +
                           m.get_str());
  return r;
}

// Integral change of variables with u = 1.
void shift(WeierstrassModel& m, const BigInt& r, const BigInt& s,
           const BigInt& t) {
  const auto [a1, a2, a3, a4, a6] = m;
  m.a1 = a1 + 2 * s;
  m.a2 = a2 - s * a1 + 3 * r - s * s;
  m.a3 = a3 + r * a1 + 2 * t;
  m.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
  m.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
}

// u = p, r = s = t = 0; every a_i must be divisible by p^i.
void scale_down(WeierstrassModel& m, const BigInt& p) {
  const BigInt p2 = p * p, p3 = p2 * p;
  m.a1 /= p;
  m.a2 /= p2;
  m.a3 /= p3;
  m.a4 /= p2 * p2;
  m.a6 /= p3 * p3;
}

// Nearest integer to a / b for b > 0, ties towards +inf.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

LocalData make_local(const BigInt& p, Kodaira k, unsigned f, unsigned v) {
  ReductionKind kind = ReductionKind::kAdditive;
  if (k.is_good())
    kind = ReductionKind::kGood;
  else if (k.is_multiplicative())
    kind = ReductionKind::kMultiplicative;
  return {p, k, f, v, kind};
}

// Conductor exponent bounds: f_2 <= 8, f_3 <= 5, f_p <= 2 otherwise.
void check_exponent_bound(const LocalData& d) {
  const unsigned bound = d.p == 2 ? 8 : d.p == 3 ? 5 : 2;
  if (d.f_p > bound)
    throw std::logic_error("conductor exponent " + std::to_string(d.f_p) +
                           " at p=" + d.p.get_str() + " exceeds bound");
}

}  // namespace

Kodaira Kodaira::parse(const std::string& s) {
  static const std::pair<const char*, Kind> kFixed[] = {
      {"II*", Kind::kIIStar}, {"III*", Kind::kIIIStar}, {"IV*", Kind::kIVStar},
      {"II", Kind::kII},      {"III", Kind::kIII},      {"IV", Kind::kIV}};
  for (const auto& [name, kind] : kFixed)
    if (s == name) return {kind, 0};
  if (s.size() >= 2 && s[0] == 'I') {
    const bool star = s.back() == '*';
    const std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; }))
      return {star ? Kind::kIStar : Kind::kI,
              static_cast<unsigned>(std::stoul(digits))};
  }
  throw DomainError("unknown Kodaira symbol '" + s + "'");
}

std::string Kodaira::to_string() const {
  switch (kind) {
    case Kind::kI: return "I" + std::to_string(n);
    case Kind::kIStar: return "I" + std::to_string(n) + "*";
    case Kind::kII: return "II";
    case Kind::kIII: return "III";
    case Kind::kIV: return "IV";
    case Kind::kIIStar: return "II*";
    case Kind::kIIIStar: return "III*";
    case Kind::kIVStar: return "IV*";
  }
  return "?";
}

std::string to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::kGood: return "good";
    case ReductionKind::kMultiplicative: return "multiplicative";
    case ReductionKind::kAdditive: return "additive";
  }
  return "?";
}

// Tate's algorithm, following the step-by-step form that works uniformly for
// p = 2 and p = 3 (no reliance on c4/c6 shortcuts there).
LocalMinimization minimize_at(const WeierstrassModel& input, const BigInt& p) {
  if (!is_prime(p).prime)
    throw DomainError("local reduction at non-prime " + p.get_str());
  require_nonsingular(input);

  using K = Kodaira::Kind;
  const BigInt p2 = p * p, p3 = p2 * p, p4 = p2 * p2;
  const BigInt half = p == 2 ? BigInt(0) : invmod(BigInt(2), p);
  WeierstrassModel m = input;
  bool scaled = false;

  for (;;) {
    const CurveInvariants inv = invariants(m);
    const unsigned n = val(inv.disc, p);
    auto done = [&](Kodaira k, unsigned f) {
      LocalData d = make_local(p, k, f, n);
      check_exponent_bound(d);
      return LocalMinimization{d, m, scaled};
    };
    if (n == 0) return done({K::kI, 0}, 0);

    // Move the singular point of the reduction to (0, 0).
    BigInt r, t;
    if (p == 2) {
      r = divides(p, inv.b2) ? mod(m.a4, p) : mod(m.a3, p);
      t = mod(r * (1 + m.a2 + m.a4) + m.a6, p);
    } else if (p == 3) {
      r = divides(p, inv.b2) ? mod(-inv.b6, p) : mod(-inv.b2 * inv.b4, p);
      t = mod(m.a1 * r + m.a3, p);
    } else {
      r = divides(p, inv.c4)
              ? mod(-invmod(BigInt(12), p) * inv.b2, p)
              : mod(-invmod(mod(12 * inv.c4, p), p) * (inv.c6 + inv.b2 * inv.c4),
                    p);
      t = mod(-half * (m.a1 * r + m.a3), p);
    }
    shift(m, r, 0, t);

    if (!divides(p, inv.c4)) return done({K::kI, n}, 1);

    // Additive reduction from here on.
    if (!divides(p2, m.a6)) return done({K::kII, 0}, n);
    const CurveInvariants inv2 = invariants(m);
    if (!divides(p3, inv2.b8)) return done({K::kIII, 0}, n - 1);
    if (!divides(p3, inv2.b6)) return done({K::kIV, 0}, n - 2);

    // Now arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
    BigInt s;
    if (p == 2) {
      s = mod(m.a2, 2);
      t = 2 * mod(m.a6 / 4, 2);
    } else {
      s = -m.a1 * half;
      t = -m.a3 * half;
    }
    shift(m, 0, s, t);

    // T^3 + b T^2 + c T + d, the cubic of the special fibre.
    const BigInt b = m.a2 / p, c = m.a4 / p2, d = m.a6 / p3;
    const BigInt w = 27 * d * d - b * b * c * c + 4 * b * b * b * d -
                     18 * b * c * d + 4 * c * c * c;
    const BigInt x = 3 * c - b * b;
    const int roots = !divides(p, w) ? 1 : (!divides(p, x) ? 2 : 3);

    if (roots == 1) return done({K::kIStar, 0}, n - 4);

    if (roots == 2) {
      // Move the double root to T = 0.
      if (p == 2)
        r = c;
      else if (p == 3)
        r = b * c;
      else
        r = (b * c - 9 * d) * invmod(mod(2 * x, p), p);
      shift(m, p * mod(r, p), 0, 0);

      unsigned ix = 3, iy = 3;
      BigInt mx = p2, my = p2;
      for (;;) {
        BigInt xa3 = m.a3 / my;
        BigInt xa6 = m.a6 / (mx * my);
        if (!divides(p, xa3 * xa3 + 4 * xa6)) break;
        t = p == 2 ? mod(xa6, 2) : mod(-xa3 * half, p);
        shift(m, 0, 0, my * t);
        my *= p;
        ++iy;
        const BigInt xa2 = m.a2 / p;
        const BigInt xa4 = m.a4 / (p * mx);
        xa6 = m.a6 / (mx * my);
        if (!divides(p, xa4 * xa4 - 4 * xa2 * xa6)) break;
        r = p == 2 ? mod(xa6 * xa2, 2)
                   : mod(-xa4 * invmod(mod(2 * xa2, p), p), p);
        shift(m, mx * r, 0, 0);
        mx *= p;
        ++ix;
      }
      const unsigned sub = ix + iy - 5;
      return done({K::kIStar, sub}, n - 4 - sub);
    }

    // Triple root: move it to T = 0.
    if (p == 2)
      r = b;
    else if (p == 3)
      r = -d;
    else
      r = -b * invmod(BigInt(3), p);
    shift(m, p * mod(r, p), 0, 0);

    const BigInt x3 = m.a3 / p2, x6 = m.a6 / p4;
    if (!divides(p, x3 * x3 + 4 * x6)) return done({K::kIVStar, 0}, n - 6);
    t = p == 2 ? mod(x6, 2) : mod(-x3 * half, p);
    shift(m, 0, 0, p2 * t);
    if (!divides(p4, m.a4)) return done({K::kIIIStar, 0}, n - 7);
    if (!divides(p3 * p3, m.a6)) return done({K::kIIStar, 0}, n - 8);

    // Not minimal at p.
    scale_down(m, p);
    scaled = true;
  }
}

LocalData tate_local(const WeierstrassModel& m, const BigInt& p) {
  return minimize_at(m, p).data;
}

WeierstrassModel reduced_model(const WeierstrassModel& m) {
  WeierstrassModel out = m;
  const BigInt s = -floor_div(m.a1, 2);
  shift(out, 0, s, 0);
  const BigInt r = -round_div(out.a2, 3);
  shift(out, r, 0, 0);
  const BigInt t = -floor_div(out.a3, 2);
  shift(out, 0, 0, t);
  return out;
}

GlobalData global_minimal_model(const WeierstrassModel& m,
                                const ReductionOptions& opts) {
  const CurveInvariants inv = invariants(m);
  if (inv.disc == 0)
    throw SingularCurve("model " + m.to_string() + " is singular");

  FactorOptions fo;
  fo.budget = opts.factor_budget;
  fo.hints = opts.factor_hints;
  const Factorization disc_f = factor(inv.disc, fo);

  WeierstrassModel cur = m;
  bool any_scaled = false;
  std::vector<LocalData> locals;
  for (const auto& [p, e] : disc_f.factors) {
    LocalMinimization lm = minimize_at(cur, p);
    if (lm.scaled) {
      cur = std::move(lm.minimal_model);
      any_scaled = true;
    }
    if (lm.data.v_min > 0) locals.push_back(lm.data);
  }
  if (any_scaled) cur = reduced_model(cur);

  GlobalData g;
  g.minimal_model = cur;
  g.delta_min = invariants(cur).disc;
  g.conductor.proven = disc_f.proven;
  for (const auto& d : locals) {
    if (d.f_p > 0) g.conductor.factors.push_back({d.p, d.f_p});
    if (d.f_p > 1) g.semistable = false;
  }
  g.locals = std::move(locals);
  return g;
}

Factorization conductor(const WeierstrassModel& m,
                        const ReductionOptions& opts) {
  return global_minimal_model(m, opts).conductor;
}

bool is_semistable(const WeierstrassModel& m, const ReductionOptions& opts) {
  return global_minimal_model(m, opts).semistable;
}

}  // namespace dtwin
