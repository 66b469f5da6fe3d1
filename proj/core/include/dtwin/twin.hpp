#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dtwin/family.hpp"
#include "dtwin/local_reduction.hpp"

namespace dtwin {

// Semistable isogenous discriminant twins have conductor at most this bound
// (external classification; see kIsogenyBoundCitation).
inline constexpr unsigned kIsogenousTwinConductorBound = 37;
inline constexpr std::string_view kIsogenyBoundCitation =
    "Deines (2018), Theorem 1: semistable isogenous discriminant twins have "
    "conductor at most 37";

enum class Determination { kTrue, kUndetermined };
enum class IsogenyVerdict { kNonIsogenous, kUndetermined };

std::string to_string(Determination d);
std::string to_string(IsogenyVerdict v);

struct TwinReport {
  GlobalData first;
  GlobalData second;
  bool delta_min_equal = false;
  bool conductor_equal = false;
  bool both_semistable = false;
  Rational j_first;
  Rational j_second;
  Determination non_isomorphic = Determination::kUndetermined;
  IsogenyVerdict isogeny = IsogenyVerdict::kUndetermined;
  std::vector<std::string> narrative;

  bool is_twin() const noexcept { return delta_min_equal && conductor_equal; }
};

// Verdicts from already computed global data. Throws TheoremViolation if a
// semistable pair with equal minimal discriminants has different conductors.
TwinReport classify_global(const GlobalData& first, const GlobalData& second);

TwinReport classify_pair(const WeierstrassModel& m1,
                         const WeierstrassModel& m2,
                         const ReductionOptions& opts1 = {},
                         const ReductionOptions& opts2 = {});

struct FamilyInstanceReport {
  FamilyParams params;
  ConditionReport conditions;
  FamilyDiscriminant delta;
  TwinReport twin;
};

// Builds E_(A,B) and E_(A',B') at t and checks every step of the twin theorem.
// Throws DomainError for t < 1 and TheoremViolation naming the first failed
// step.
FamilyInstanceReport verify_family_instance(
    const BigInt& t, std::uint64_t budget = kDefaultFactorBudget);

struct JSample {
  std::vector<BigInt> t_values;
  std::vector<Rational> j_values;
  bool distinct = true;
  // Index pairs (i, k), i < k, with equal j.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
};

// j(E_(A,B)) for each t as exact rationals. Throws DomainError if some t < 1.
JSample j_distinctness_sample(const std::vector<BigInt>& t_values);

}  // namespace dtwin
