#include "kc/rho.hpp"

#include <doctest.h>
#include <random>

using namespace kc;

namespace {

SeifertMatrix random_seifert(std::mt19937 &rng, long g) {
  IntMatrix A(2 * g, 2 * g);
  for (long b = 0; b < g; ++b) A.at(2 * b, 2 * b + 1) = 1;
  for (long i = 0; i < 2 * g; ++i)
    for (long j = i; j < 2 * g; ++j) {
      long v = static_cast<long>(rng() % 7) - 3;
      A.at(i, j) += v;
      if (i != j) A.at(j, i) += v;
    }
  return SeifertMatrix::from_matrix(std::move(A));
}

} // namespace

TEST_CASE("rho_finite worked values") {
  CHECK(*rho_finite(trefoil(), 1).exact == 0);
  CHECK(*rho_finite(trefoil(), 3).exact == -4);
  CHECK(rho_finite(trefoil(), 3).all_regular);
  CHECK(*rho_finite(mirror(trefoil()), 3).exact == 4);
  for (long d = 1; d <= 12; ++d)
    CHECK(*rho_finite(figure_eight(), d).exact == 0);
  // trefoil is singular at the primitive sixth roots
  CHECK_FALSE(rho_finite(trefoil(), 6).all_regular);
}

TEST_CASE("rho_finite additivity, mirror negation, parity, bound") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    SeifertMatrix a = random_seifert(rng, 1 + rng() % 2);
    SeifertMatrix b = random_seifert(rng, 1);
    for (long d : {1L, 2L, 3L, 5L, 7L}) {
      RhoValue ra = rho_finite(a, d), rb = rho_finite(b, d);
      RhoValue rs = rho_finite(connected_sum(a, b), d);
      RhoValue rm = rho_finite(mirror(a), d);
      if (ra.all_regular && rb.all_regular)
        CHECK(*rs.exact == *ra.exact + *rb.exact);
      if (ra.all_regular) {
        CHECK(*rm.exact == -*ra.exact);
        CHECK(ra.exact->get_num() % 2 == 0);
      }
      CHECK(abs(ra.exact->get_num()) <= Int(d) * a.size());
    }
  }
}

TEST_CASE("rho_integral exact values") {
  RhoValue u = rho_integral(unknot());
  CHECK(*u.exact == 0);

  RhoValue t = rho_integral(trefoil());
  REQUIRE(t.exact.has_value());
  CHECK(*t.exact == Rat(-4) / 3);

  RhoValue s = rho_integral(connected_sum(trefoil(), mirror(trefoil())));
  REQUIRE(s.exact.has_value());
  CHECK(*s.exact == 0);

  RhoValue t25 = rho_integral(torus_knot_2(5));
  REQUIRE(t25.exact.has_value());
  // arcs: -2 on (1/10, 3/10) and (7/10, 9/10), -4 on (3/10, 7/10)
  CHECK(*t25.exact == Rat(-2) * Rat(2, 5) + Rat(-4) * Rat(2, 5));
}

TEST_CASE("rho_integral interval for irrational jumps") {
  // twist_knot(-2): jumps where 2 cos = 3/2; no exact rational value.
  RhoValue v = rho_integral(twist_knot(-2), 40);
  CHECK_FALSE(v.exact.has_value());
  CHECK(v.interval.width() < Rat(1, 1 << 20));
  // -2 * (1 - 2 f0) with f0 = acos(3/4)/(2 pi) ~ 0.115024; loose sanity box.
  CHECK(v.interval.lo > Rat(-8, 5));
  CHECK(v.interval.hi < Rat(-3, 2));
}

TEST_CASE("rho_integral is the large-d limit of rho_finite / d") {
  for (const SeifertMatrix &k :
       {trefoil(), twist_knot(-2), connected_sum(trefoil(), trefoil())}) {
    RhoValue integral = rho_integral(k);
    long jumps = static_cast<long>(lt_profile(k).jumps.size());
    SignatureEngine eng(k);
    for (long d : {101L, 1009L}) {
      RhoValue fin = rho_finite(eng, d);
      Rat approx = *fin.exact / d;
      Rat err_lo = abs(approx - integral.interval.lo);
      Rat err_hi = abs(approx - integral.interval.hi);
      Rat err = err_lo > err_hi ? err_lo : err_hi;
      Rat allowed(4 * jumps, d);
      allowed.canonicalize();
      CHECK(err <= allowed);
    }
  }
}

TEST_CASE("cheeger-gromov bound") {
  CHECK(cheeger_gromov_bound(3) == 209139840);
  CHECK(cheeger_gromov_bound(0) == 0);
  CHECK(cheeger_gromov_bound(10) == 697132800);
}
