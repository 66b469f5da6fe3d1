#pragma once

// Test-only reference computations. Everything here is deliberately naive and
// shares no code with the library paths it is used to check.

#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace oracle {

using Big = mpz_class;

// Trial division by every integer d >= 2 with d*d <= n.
inline std::vector<std::pair<Big, unsigned>> trial_factor(Big n) {
  std::vector<std::pair<Big, unsigned>> out;
  if (n < 0) n = -n;
  for (Big d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline Big odd_radical(const Big& n) {
  Big r = 1;
  for (const auto& [p, e] : trial_factor(n))
    if (p != 2) r *= p;
  return r;
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline unsigned naive_valuation(Big n, const Big& p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// Largest d dividing both, found by scanning every candidate.
inline long gcd_by_scan(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  if (a == 0) return b;
  if (b == 0) return a;
  for (long d = std::min(a, b); d >= 1; --d)
    if (a % d == 0 && b % d == 0) return d;
  return 1;
}

// y^2 = x(x - A)(x + B): closed forms 2^4 A^2 B^2 (A+B)^2 and 2^4(A^2+AB+B^2).
inline Big frey_disc(const Big& A, const Big& B) {
  const Big k = A * B * (A + B);
  return 16 * k * k;
}
inline Big frey_c4(const Big& A, const Big& B) {
  return 16 * (A * A + A * B + B * B);
}
inline mpq_class frey_j(const Big& A, const Big& B) {
  const Big q = A * A + A * B + B * B;
  const Big k = A * B * (A + B);
  mpq_class j(256 * q * q * q, k * k);
  j.canonicalize();
  return j;
}

inline bool is_perfect_power(const Big& n, unsigned k) {
  if (n < 1) return false;
  Big r;
  return mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

// Frozen reduction data computed independently with PARI/GP
// (tests/oracle/gen_local_fixtures.py).
struct LocalRow {
  std::string p;
  std::string kodaira;
  unsigned f_p;
  unsigned v_min;
};

struct GlobalRow {
  std::vector<std::string> ainvs;
  std::string disc, delta_min, conductor;
  std::vector<LocalRow> locals;
};

inline std::vector<GlobalRow> load_local_fixtures(const std::string& path) {
  std::vector<GlobalRow> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    GlobalRow r;
    r.ainvs = j.at("ainvs").get<std::vector<std::string>>();
    r.disc = j.at("disc").get<std::string>();
    r.delta_min = j.at("delta_min").get<std::string>();
    r.conductor = j.at("conductor").get<std::string>();
    for (const auto& l : j.at("locals"))
      r.locals.push_back({l[0].get<std::string>(), l[1].get<std::string>(),
                          l[2].get<unsigned>(), l[3].get<unsigned>()});
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace oracle
