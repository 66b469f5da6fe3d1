#include <random>

#include "doctest.h"
#include "dtwin/errors.hpp"
#include "dtwin/local_reduction.hpp"
#include "oracles.hpp"

using namespace dtwin;

namespace {

WeierstrassModel model(long a1, long a2, long a3, long a4, long a6) {
  return {a1, a2, a3, a4, a6};
}

struct Expect {
  WeierstrassModel m;
  long p;
  const char* kodaira;
  unsigned f_p;
  unsigned v_min;
};

}  // namespace

TEST_CASE("kodaira symbols round-trip") {
  for (const char* s : {"I0", "I1", "I17", "I0*", "I3*", "II", "III", "IV",
                        "II*", "III*", "IV*"})
    CHECK(Kodaira::parse(s).to_string() == s);
  CHECK(Kodaira::parse("I0").is_good());
  CHECK(Kodaira::parse("I4").is_multiplicative());
  CHECK_FALSE(Kodaira::parse("I0*").is_multiplicative());
  CHECK_THROWS_AS(Kodaira::parse("V"), DomainError);
  CHECK_THROWS_AS(Kodaira::parse(""), DomainError);
}

TEST_CASE("local data against frozen reference values") {
  const Expect cases[] = {
      {model(0, -1, 1, 0, 0), 11, "I1", 1, 1},
      {model(0, -1, 1, -10, -20), 11, "I5", 1, 5},
      {model(1, 0, 1, 4, -6), 2, "I6", 1, 6},
      {model(1, 0, 1, 4, -6), 7, "I3", 1, 3},
      {model(1, 1, 1, -10, -10), 3, "I4", 1, 4},
      {model(1, -1, 1, -1, -14), 17, "I4", 1, 4},
      {model(0, 1, 1, -9, -15), 19, "I3", 1, 3},
      {model(0, 0, 0, 0, 1), 2, "IV", 2, 4},
      {model(0, 0, 0, 0, 1), 3, "III", 2, 3},
      {model(0, 0, 1, 0, -7), 3, "IV*", 3, 9},
      {model(0, 0, 0, -1, 0), 2, "III", 5, 6},
      {model(0, 0, 0, 4, 0), 2, "I3*", 5, 12},
      {model(0, 0, 0, 0, -2), 2, "II", 6, 6},
      {model(0, 0, 0, 0, -2), 3, "II", 3, 3},
      {model(0, 0, 0, -25, 0), 5, "I0*", 2, 6},
      {model(0, 0, 0, 0, 3125), 5, "II*", 2, 10},
      {model(0, 0, 0, 0, 625), 5, "IV*", 2, 8},
      {model(0, 0, 0, -125, 0), 5, "III*", 2, 9},
      {model(0, 5, 0, 125, 0), 5, "I2*", 2, 8},
      {model(0, 3, 0, 27, 0), 3, "I2*", 2, 8},
      {model(0, 0, 0, -2, 0), 2, "III", 8, 9},
      {model(0, 13, 0, -48, 0), 2, "I0", 0, 0},
      {model(0, 13, 0, -48, 0), 19, "I2", 1, 2},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m.to_string());
    CAPTURE(c.p);
    const LocalData d = tate_local(c.m, c.p);
    CHECK(d.kodaira.to_string() == c.kodaira);
    CHECK(d.f_p == c.f_p);
    CHECK(d.v_min == c.v_min);
  }
}

TEST_CASE("global data against frozen reference values") {
  struct G {
    WeierstrassModel m;
    long delta_min;
    long conductor;
  };
  const G cases[] = {
      {model(1, 3, 0, -3, 0), 3249, 57},
      {model(0, 13, 0, -48, 0), 3249, 57},
      {model(0, 0, 8, -16, 0), 37, 37},
      {model(0, 0, 27, -81, 0), 37, 37},
      {model(0, -25, 125, 0, 0), -11, 11},
      {model(0, 0, 0, 0, 1), -432, 36},
      {model(0, 0, 0, 0, -2), -1728, 1728},
      {model(0, 0, 0, -1, 0), 64, 32},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m.to_string());
    const GlobalData g = global_minimal_model(c.m);
    CHECK(g.delta_min == c.delta_min);
    CHECK(g.conductor.value() == c.conductor);
  }
  CHECK(global_minimal_model(model(0, 13, 0, -48, 0)).minimal_model ==
        model(1, 0, 1, -7, 5));
  CHECK(global_minimal_model(model(0, 0, 8, -16, 0)).minimal_model ==
        model(0, 0, 1, -1, 0));
}

TEST_CASE("all generated fixtures") {
  const auto rows =
      oracle::load_local_fixtures(DTWIN_TEST_DATA_DIR "/local_fixtures.jsonl");
  REQUIRE(rows.size() >= 200);
  for (const auto& r : rows) {
    std::array<BigInt, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = BigInt(r.ainvs[i]);
    const WeierstrassModel m = WeierstrassModel::from_array(a);
    CAPTURE(m.to_string());
    CHECK(invariants(m).disc == BigInt(r.disc));
    const GlobalData g = global_minimal_model(m);
    CHECK(g.delta_min == BigInt(r.delta_min));
    CHECK(g.conductor.value() == BigInt(r.conductor));
    // Rows also list primes of good reduction that divide the input
    // discriminant; the library reports only primes dividing delta_min.
    std::vector<oracle::LocalRow> bad;
    for (const auto& l : r.locals) {
      if (l.kodaira == "I0") {
        const LocalData d = tate_local(m, BigInt(l.p));
        CHECK(d.kodaira.is_good());
        CHECK(d.f_p == 0);
        CHECK(d.v_min == 0);
      } else {
        bad.push_back(l);
      }
    }
    REQUIRE(g.locals.size() == bad.size());
    for (std::size_t i = 0; i < bad.size(); ++i) {
      CHECK(g.locals[i].p == BigInt(bad[i].p));
      CHECK(g.locals[i].kodaira.to_string() == bad[i].kodaira);
      CHECK(g.locals[i].f_p == bad[i].f_p);
      CHECK(g.locals[i].v_min == bad[i].v_min);
    }
  }
}

TEST_CASE("reduction kinds follow the kodaira symbol") {
  CHECK(tate_local(model(0, -1, 1, 0, 0), 11).reduction ==
        ReductionKind::kMultiplicative);
  CHECK(tate_local(model(0, -1, 1, 0, 0), 5).reduction == ReductionKind::kGood);
  CHECK(tate_local(model(0, 0, 0, 0, 1), 3).reduction ==
        ReductionKind::kAdditive);
  CHECK(is_semistable(model(1, 3, 0, -3, 0)));
  CHECK_FALSE(is_semistable(model(0, 0, 0, 0, 1)));
  CHECK(conductor(model(1, 1, 1, -10, -10)).value() == 15);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(tate_local(model(0, 0, 0, 0, 0), 2), SingularCurve);
  CHECK_THROWS_AS(tate_local(model(0, -1, 1, 0, 0), 9), DomainError);
  CHECK_THROWS_AS(global_minimal_model(model(0, 1, 0, 0, 0)), SingularCurve);
  ReductionOptions tight;
  tight.factor_budget = 1;
  // Discriminant 16 * (p q)^2 * ... with two 19-digit primes.
  const BigInt p("1000000000000000003"), q("1000000000000000009");
  CHECK_THROWS_AS(global_minimal_model(frey_curve(p * q * 3, 16), tight),
                  FactorizationBudgetExceeded);
}

TEST_CASE("minimize_at reports scaling") {
  const LocalMinimization at2 = minimize_at(model(0, 13, 0, -48, 0), 2);
  CHECK(at2.scaled);
  CHECK(at2.data.v_min == 0);
  CHECK(invariants(at2.minimal_model).disc == 3249);
  const LocalMinimization at3 = minimize_at(model(0, 13, 0, -48, 0), 3);
  CHECK_FALSE(at3.scaled);
  CHECK(at3.minimal_model == model(0, 13, 0, -48, 0));
}

TEST_CASE("reduced form") {
  const WeierstrassModel r = reduced_model(model(4, 9, 6, 1, 2));
  CHECK((r.a1 == 0 || r.a1 == 1));
  CHECK((r.a3 == 0 || r.a3 == 1));
  CHECK((r.a2 >= -1 && r.a2 <= 1));
  CHECK(invariants(r).disc == invariants(model(4, 9, 6, 1, 2)).disc);
  CHECK(*invariants(r).j == *invariants(model(4, 9, 6, 1, 2)).j);
}

TEST_CASE("invariance under random changes of variables") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-20, 20);
  const long scales[] = {1, 2, 3, 6};
  int checked = 0;
  while (checked < 150) {
    const WeierstrassModel m = model(c(rng), c(rng), c(rng), c(rng), c(rng));
    if (invariants(m).disc == 0) continue;
    const GlobalData base = global_minimal_model(m);
    const long u = scales[rng() % 4];
    const WeierstrassModel n =
        transform(m, Rational(1, u), c(rng), c(rng), c(rng));
    const GlobalData other = global_minimal_model(n);
    CAPTURE(m.to_string());
    CAPTURE(n.to_string());
    CHECK(other.delta_min == base.delta_min);
    CHECK(other.conductor == base.conductor);
    CHECK(other.locals == base.locals);
    const GlobalData again = global_minimal_model(base.minimal_model);
    CHECK(again.minimal_model == base.minimal_model);
    ++checked;
  }
}
