#include <random>

#include "doctest.h"
#include "dtwin/curve.hpp"
#include "dtwin/errors.hpp"
#include "oracles.hpp"

using namespace dtwin;

namespace {

WeierstrassModel model(long a1, long a2, long a3, long a4, long a6) {
  return {a1, a2, a3, a4, a6};
}

}  // namespace

TEST_CASE("frey curve coefficients") {
  const WeierstrassModel e = frey_curve(3, 16);
  CHECK(e == model(0, 13, 0, -48, 0));
  CHECK(e.to_string() == "[0,13,0,-48,0]");
  CHECK_THROWS_AS(frey_curve(0, 16), SingularCurve);
  CHECK_THROWS_AS(frey_curve(3, 0), SingularCurve);
  CHECK_THROWS_AS(frey_curve(5, -5), SingularCurve);
}

TEST_CASE("invariants of small curves") {
  const CurveInvariants e = invariants(frey_curve(3, 16));
  CHECK(e.c4 == 5008);
  CHECK(e.disc == 13307904);
  REQUIRE(e.j);
  CHECK(*e.j == Rational(30664297, 3249));

  const CurveInvariants x = invariants(model(0, -1, 1, 0, 0));
  CHECK(x.b2 == -4);
  CHECK(x.b4 == 0);
  CHECK(x.b6 == 1);
  CHECK(x.b8 == -1);
  CHECK(x.c4 == 16);
  CHECK(x.c6 == -152);
  CHECK(x.disc == -11);
  CHECK(*x.j == Rational(-4096, 11));

  CHECK(invariants(model(0, 0, 0, 0, 1)).disc == -432);
  CHECK(invariants(model(0, 0, 1, -1, 0)).disc == 37);
  CHECK(invariants(model(1, 1, 1, -10, -10)).disc == 50625);
}

TEST_CASE("singular models") {
  const WeierstrassModel cusp = model(0, 0, 0, 0, 0);
  const WeierstrassModel node = model(0, 1, 0, 0, 0);
  CHECK(invariants(cusp).disc == 0);
  CHECK_FALSE(invariants(node).j.has_value());
  CHECK_THROWS_AS(j_invariant(cusp), SingularCurve);
  CHECK_THROWS_AS(require_nonsingular(node), SingularCurve);
  CHECK_NOTHROW(require_nonsingular(model(0, -1, 1, 0, 0)));
}

TEST_CASE("frey invariants match the closed forms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 300; ++i) {
    const BigInt A = d(rng), B = d(rng);
    if (A == 0 || B == 0 || A + B == 0) continue;
    const CurveInvariants inv = invariants(frey_curve(A, B));
    CHECK(inv.disc == oracle::frey_disc(A, B));
    CHECK(inv.c4 == oracle::frey_c4(A, B));
    CHECK(*inv.j == oracle::frey_j(A, B));
    CHECK(1728 * inv.disc == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
  }
}

TEST_CASE("transform examples and errors") {
  const WeierstrassModel e = frey_curve(3, 16);
  // x = 4x' - 4, y = 8y' + 4x' + 4
  CHECK(transform(e, 2, -4, 1, 4) == model(1, 0, 1, -7, 5));
  CHECK(transform(e, 1, 0, 0, 0) == e);
  CHECK_THROWS_AS(transform(model(0, -1, 1, 0, 0), 2, 0, 0, 0),
                  NonIntegralTransform);
  CHECK_THROWS_AS(transform(e, 0, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(transform(e, 1, Rational(1, 2), 0, 0), NonIntegralTransform);
}

TEST_CASE("random transforms preserve j and scale the discriminant") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-50, 50);
  const long scales[] = {1, 2, 3, 6};
  for (int i = 0; i < 300; ++i) {
    const WeierstrassModel m = model(c(rng), c(rng), c(rng), c(rng), c(rng));
    if (invariants(m).disc == 0) continue;
    const long u = scales[rng() % 4];
    const WeierstrassModel up =
        transform(m, Rational(1, u), c(rng), c(rng), c(rng));
    const CurveInvariants a = invariants(m), b = invariants(up);
    BigInt u12;
    mpz_ui_pow_ui(u12.get_mpz_t(), static_cast<unsigned long>(u), 12);
    CHECK(b.disc == a.disc * u12);
    CHECK(*a.j == *b.j);
  }
}

TEST_CASE("transform composes with its inverse") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-30, 30);
  for (int i = 0; i < 200; ++i) {
    const WeierstrassModel m = model(c(rng), c(rng), c(rng), c(rng), c(rng));
    const Rational u = (rng() % 2) ? 1 : -1;
    const Rational r = c(rng), s = c(rng), t = c(rng);
    const WeierstrassModel n = transform(m, u, r, s, t);
    // Inverse of (u, r, s, t) is (1/u, -r/u^2, -s/u, (rs - t)/u^3).
    const WeierstrassModel back =
        transform(n, 1 / u, -r / (u * u), -s / u, (r * s - t) / (u * u * u));
    CHECK(back == m);
  }
}
