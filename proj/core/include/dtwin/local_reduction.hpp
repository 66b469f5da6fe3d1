#pragma once

#include <string>
#include <vector>

#include "dtwin/curve.hpp"
#include "dtwin/int_core.hpp"

namespace dtwin {

struct Kodaira {
  enum class Kind { kI, kIStar, kII, kIII, kIV, kIIStar, kIIIStar, kIVStar };

  Kind kind = Kind::kI;
  unsigned n = 0;  // subscript for I_n and I*_n

  static Kodaira parse(const std::string& s);  // "I0", "I5", "I2*", "IV*", ...
  std::string to_string() const;

  bool is_good() const noexcept { return kind == Kind::kI && n == 0; }
  bool is_multiplicative() const noexcept { return kind == Kind::kI && n > 0; }

  friend bool operator==(const Kodaira&, const Kodaira&) = default;
};

enum class ReductionKind { kGood, kMultiplicative, kAdditive };

std::string to_string(ReductionKind k);

struct LocalData {
  BigInt p;
  Kodaira kodaira;
  unsigned f_p = 0;    // conductor exponent
  unsigned v_min = 0;  // valuation of the minimal discriminant
  ReductionKind reduction = ReductionKind::kGood;

  friend bool operator==(const LocalData&, const LocalData&) = default;
};

struct GlobalData {
  WeierstrassModel minimal_model;
  BigInt delta_min;  // signed
  Factorization conductor;
  bool semistable = true;
  std::vector<LocalData> locals;  // one per prime dividing delta_min, ascending
};

// Tate's algorithm at one prime, together with a model that is minimal at p.
// `scaled` is true when the input was not minimal at p; minimal_model is then
// obtained from the input by an integral change of variables with u = p^k.
struct LocalMinimization {
  LocalData data;
  WeierstrassModel minimal_model;
  bool scaled = false;
};

LocalMinimization minimize_at(const WeierstrassModel& m, const BigInt& p);

// Throws SingularCurve for singular models and DomainError for non-prime p.
LocalData tate_local(const WeierstrassModel& m, const BigInt& p);

struct ReductionOptions {
  std::uint64_t factor_budget = kDefaultFactorBudget;
  // Divisors of the discriminant known in advance (algebraic pre-splitting).
  std::vector<BigInt> factor_hints;
};

// Minimal model, signed minimal discriminant, conductor and per-prime data.
// When any prime needed rescaling the result is also put in reduced form
// (a1, a3 in {0, 1}, a2 in {-1, 0, 1}); an already minimal input is returned
// unchanged.
GlobalData global_minimal_model(const WeierstrassModel& m,
                                const ReductionOptions& opts = {});

Factorization conductor(const WeierstrassModel& m,
                        const ReductionOptions& opts = {});

bool is_semistable(const WeierstrassModel& m,
                   const ReductionOptions& opts = {});

// Standard shape a1, a3 in {0, 1}, a2 in {-1, 0, 1} via a unimodular change of
// variables with r, s, t integral.
WeierstrassModel reduced_model(const WeierstrassModel& m);

}  // namespace dtwin
