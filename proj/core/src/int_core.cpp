#include "dtwin/int_core.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "dtwin/errors.hpp"

namespace dtwin {

namespace {

constexpr std::array<unsigned, 13> kWitnessBases = {2,  3,  5,  7,  11, 13, 17,
                                                    19, 23, 29, 31, 37, 41};
constexpr int kRandomRounds = 64;  // 4^-64 = 2^-128

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionLimit;
           j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(const BigInt& n, const BigInt& base,
                           const BigInt& d, unsigned s) {
  const BigInt n1 = n - 1;
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's cycle-finding variant with batched gcds. Returns a nontrivial
// divisor of the odd composite n, or 0 when the budget runs out.
BigInt brent_rho(const BigInt& n, std::uint64_t& budget) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  constexpr std::uint64_t kBatch = 128;
  while (budget > 0) {
    const BigInt c = rng.get_z_range(n - 3) + 1;
    BigInt y = rng.get_z_range(n);
    BigInt x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    auto step = [&](BigInt& z) {
      z = (z * z + c) % n;
    };
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t m = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < m; ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        budget = budget > m ? budget - m : 0;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        if (budget == 0 && g == 1) return 0;
      }
      r *= 2;
    }
    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        step(ys);
        mpz_gcd(g.get_mpz_t(), BigInt(abs(x - ys)).get_mpz_t(),
                n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    // Degenerate cycle; restart with a fresh polynomial.
  }
  return 0;
}

void add_prime(std::map<BigInt, unsigned>& acc, const BigInt& p, unsigned e) {
  acc[p] += e;
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

unsigned p_adic_valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw DomainError("valuation of zero is undefined");
  if (!is_prime(p).prime)
    throw DomainError("valuation base " + p.get_str() + " is not prime");
  return static_cast<unsigned>(
      mpz_remove(BigInt().get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

BigInt deterministic_primality_bound() {
  return BigInt("3317044064679887385961981");
}

PrimalityResult is_prime(const BigInt& n) {
  if (n < 2) return {false, true};
  for (unsigned b : kWitnessBases) {
    if (n == b) return {true, true};
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return {false, true};
  }
  BigInt d = n - 1;
  const unsigned s = static_cast<unsigned>(
      mpz_remove(d.get_mpz_t(), d.get_mpz_t(), BigInt(2).get_mpz_t()));
  if (n < deterministic_primality_bound()) {
    for (unsigned b : kWitnessBases)
      if (!strong_probable_prime(n, b, d, s)) return {false, true};
    return {true, true};
  }
  for (unsigned b : kWitnessBases)
    if (!strong_probable_prime(n, b, d, s)) return {false, true};
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(n);
  for (int i = 0; i < kRandomRounds; ++i) {
    const BigInt base = rng.get_z_range(n - 3) + 2;
    if (!strong_probable_prime(n, base, d, s)) return {false, true};
  }
  return {true, false};
}

BigInt Factorization::value() const {
  BigInt v = sign;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

BigInt Factorization::radical() const {
  BigInt r = 1;
  for (const auto& f : factors) r *= f.prime;
  return r;
}

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (sign < 0) {
    os << "-1";
    first = false;
  }
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    os << p.get_str();
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '1';
  return os.str();
}

Factorization factor(const BigInt& n, const FactorOptions& opts) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization out;
  out.sign = n < 0 ? -1 : 1;

  // Split |n| along the hinted divisors; pieces need not be coprime.
  std::vector<BigInt> pieces;
  BigInt rest = abs(n);
  for (const BigInt& h : opts.hints) {
    BigInt g = gcd(h, rest);
    while (g > 1) {
      pieces.push_back(g);
      rest /= g;
      g = gcd(g, rest);
    }
  }
  pieces.push_back(rest);

  std::map<BigInt, unsigned> acc;
  std::uint64_t budget = opts.budget;
  const auto& primes = small_primes();
  std::vector<BigInt> partial;

  std::vector<BigInt> work;
  for (BigInt m : pieces) {
    if (m == 1) continue;
    for (std::uint32_t p : primes) {
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
          ++e;
        }
        add_prime(acc, BigInt(p), e);
      }
      if (m == 1 || BigInt(p) * p > m) break;
    }
    if (m > 1) work.push_back(m);
  }

  while (!work.empty()) {
    BigInt m = std::move(work.back());
    work.pop_back();
    if (m == 1) continue;
    // Perfect powers defeat rho; peel them off first.
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      for (unsigned k = static_cast<unsigned>(mpz_sizeinbase(m.get_mpz_t(), 2));
           k >= 2; --k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k)) {
          for (unsigned i = 0; i < k; ++i) work.push_back(root);
          m = 1;
          break;
        }
      }
      if (m == 1) continue;
    }
    const PrimalityResult pr = is_prime(m);
    if (pr.prime) {
      out.proven = out.proven && pr.proven;
      add_prime(acc, m, 1);
      continue;
    }
    const BigInt d = brent_rho(m, budget);
    if (d == 0) {
      for (const auto& [p, e] : acc)
        for (unsigned i = 0; i < e; ++i) partial.push_back(p);
      for (const auto& w : work) partial.push_back(w);
      throw FactorizationBudgetExceeded(std::move(partial), m);
    }
    work.push_back(d);
    work.push_back(m / d);
  }

  for (auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

Factorization merge(const Factorization& a, const Factorization& b) {
  std::map<BigInt, unsigned> acc;
  for (const auto& f : a.factors) acc[f.prime] += f.exponent;
  for (const auto& f : b.factors) acc[f.prime] += f.exponent;
  Factorization out;
  out.sign = a.sign * b.sign;
  out.proven = a.proven && b.proven;
  for (auto& [p, e] : acc) out.factors.push_back({p, e});
  return out;
}

// ---------------------------------------------------------------------------

IntPoly::IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) {
  normalize();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1, BigInt(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const BigInt& a, const BigInt& b) {
  return IntPoly({b, a});
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigInt(0);
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

IntPoly IntPoly::divided_by(const BigInt& c) const {
  if (c == 0) throw DomainError("polynomial division by zero");
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw DomainError("coefficient " + x.get_str() + " not divisible by " +
                        c.get_str());
    out.push_back(x / c);
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::mod(const BigInt& m) const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& x : coeffs_) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    out.push_back(r);
  }
  return IntPoly(std::move(out));
}

IntPoly poly_arith(PolyOp op, const IntPoly& f, const IntPoly& g) {
  switch (op) {
    case PolyOp::kAdd: return f + g;
    case PolyOp::kSub: return f - g;
    case PolyOp::kMul: return f * g;
  }
  return {};
}

BigInt poly_eval(const IntPoly& f, const BigInt& x) { return f.eval(x); }

}  // namespace dtwin
