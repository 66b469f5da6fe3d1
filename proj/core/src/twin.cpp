#include "dtwin/twin.hpp"

#include <map>

#include "dtwin/errors.hpp"

namespace dtwin {

namespace {

std::string str(const Rational& q) { return q.get_str(); }

// Radical of |n| from the primes recorded in the local data.
BigInt radical_of(const GlobalData& g) {
  BigInt r = 1;
  for (const auto& d : g.locals) r *= d.p;
  return r;
}

}  // namespace

std::string to_string(Determination d) {
  return d == Determination::kTrue ? "true" : "undetermined";
}

std::string to_string(IsogenyVerdict v) {
  return v == IsogenyVerdict::kNonIsogenous ? "non-isogenous" : "undetermined";
}

TwinReport classify_global(const GlobalData& first, const GlobalData& second) {
  TwinReport r;
  r.first = first;
  r.second = second;
  auto& log = r.narrative;

  r.delta_min_equal = first.delta_min == second.delta_min;
  log.push_back("minimal discriminants " + first.delta_min.get_str() + " and " +
                second.delta_min.get_str() +
                (r.delta_min_equal ? " are equal" : " differ"));

  const BigInt n1 = first.conductor.value(), n2 = second.conductor.value();
  r.conductor_equal = n1 == n2;
  log.push_back("conductors " + n1.get_str() + " and " + n2.get_str() +
                (r.conductor_equal ? " are equal" : " differ"));

  r.both_semistable = first.semistable && second.semistable;
  log.push_back(std::string("semistable: ") +
                (first.semistable ? "yes" : "no") + " / " +
                (second.semistable ? "yes" : "no"));

  for (const GlobalData* g : {&first, &second})
    if (g->semistable && g->conductor.value() != radical_of(*g))
      throw TheoremViolation("semistable conductor",
                             "conductor " + g->conductor.value().get_str() +
                                 " is not the radical of |delta_min|");
  if (r.both_semistable && r.delta_min_equal) {
    if (!r.conductor_equal)
      throw TheoremViolation("equal conductor",
                             "semistable curves with equal minimal "
                             "discriminant have different conductors");
    log.push_back(
        "both semistable with equal minimal discriminant, so the conductor is "
        "the common radical " + n1.get_str());
  }

  r.j_first = j_invariant(first.minimal_model);
  r.j_second = j_invariant(second.minimal_model);
  if (r.j_first != r.j_second) {
    r.non_isomorphic = Determination::kTrue;
    log.push_back("j-invariants " + str(r.j_first) + " and " +
                  str(r.j_second) + " differ, so the curves are not isomorphic");
  } else {
    log.push_back("j-invariants coincide (" + str(r.j_first) +
                  "); isomorphism is not decided");
  }

  if (r.is_twin() && r.both_semistable &&
      r.non_isomorphic == Determination::kTrue &&
      n1 > kIsogenousTwinConductorBound) {
    r.isogeny = IsogenyVerdict::kNonIsogenous;
    log.push_back("semistable non-isomorphic twins with conductor " +
                  n1.get_str() + " > " +
                  std::to_string(kIsogenousTwinConductorBound) +
                  " are not isogenous [" + std::string(kIsogenyBoundCitation) +
                  "]");
  } else {
    log.push_back("isogeny undetermined: the conductor bound criterion needs "
                  "semistable non-isomorphic twins with conductor > " +
                  std::to_string(kIsogenousTwinConductorBound));
  }
  return r;
}

TwinReport classify_pair(const WeierstrassModel& m1,
                         const WeierstrassModel& m2,
                         const ReductionOptions& opts1,
                         const ReductionOptions& opts2) {
  return classify_global(global_minimal_model(m1, opts1),
                         global_minimal_model(m2, opts2));
}

FamilyInstanceReport verify_family_instance(const BigInt& t,
                                            std::uint64_t budget) {
  FamilyInstanceReport rep;
  rep.params = family_params(t);
  const FamilyParams& p = rep.params;
  const std::string at = " at t=" + t.get_str();

  rep.conditions = verify_conditions(p);
  for (const auto& c : rep.conditions.conditions)
    if (!c.pass)
      throw TheoremViolation("condition (" + c.id + ")", c.statement + at);

  rep.delta = delta_min_family(t, budget);

  ReductionOptions opts;
  opts.factor_budget = budget;
  opts.factor_hints = family_split(p);
  opts.factor_hints.push_back(2);
  rep.twin = classify_pair(p.curve(), p.curve_prime(), opts, opts);
  const TwinReport& tw = rep.twin;

  auto require = [&](bool ok, const std::string& step,
                     const std::string& detail) {
    if (!ok) throw TheoremViolation(step, detail + at);
  };
  require(tw.delta_min_equal, "equal minimal discriminant",
          "minimal discriminants differ");
  require(tw.first.delta_min == rep.delta.value, "minimal discriminant formula",
          "delta_min " + tw.first.delta_min.get_str() +
              " != A^2B^2(A+B)^2/2^8 = " + rep.delta.value.get_str());
  require(tw.conductor_equal, "equal conductor", "conductors differ");
  require(tw.both_semistable, "semistability", "a family curve is not semistable");

  BigInt odd_radical = 1;
  for (const auto& f : rep.delta.factorization.factors)
    if (f.prime != 2) odd_radical *= f.prime;
  const BigInt n = tw.first.conductor.value();
  require(n == odd_radical, "conductor formula",
          "conductor " + n.get_str() + " != odd radical of AB(A+B) " +
              odd_radical.get_str());
  require(n > kIsogenousTwinConductorBound, "conductor bound",
          "conductor " + n.get_str() + " <= 37");
  require(tw.non_isomorphic == Determination::kTrue, "distinct j",
          "j-invariants coincide");
  require(tw.isogeny == IsogenyVerdict::kNonIsogenous, "non-isogeny",
          "verdict is undetermined");
  return rep;
}

JSample j_distinctness_sample(const std::vector<BigInt>& t_values) {
  for (const auto& t : t_values)
    if (t < 1) throw DomainError("t must be >= 1, got " + t.get_str());
  JSample s;
  s.t_values = t_values;
  std::map<Rational, std::size_t> seen;
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    const FamilyParams p = family_params(t_values[i]);
    Rational j = j_invariant(p.curve());
    auto [it, fresh] = seen.emplace(j, i);
    if (!fresh) {
      s.distinct = false;
      // Report against every earlier occurrence.
      for (std::size_t k = 0; k < i; ++k)
        if (s.j_values[k] == j) s.collisions.emplace_back(k, i);
    }
    s.j_values.push_back(std::move(j));
  }
  return s;
}

}  // namespace dtwin
