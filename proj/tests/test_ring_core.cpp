#include "kc/enclosure.hpp"
#include "kc/errors.hpp"
#include "kc/intmatrix.hpp"
#include "kc/laurent.hpp"
#include "kc/poly.hpp"

#include "oracle.hpp"

#include <doctest.h>
#include <random>

using namespace kc;

namespace {

IntMatrix mat(const std::vector<std::vector<long>> &rows) {
  IntMatrix m(static_cast<long>(rows.size()),
              rows.empty() ? 0 : static_cast<long>(rows[0].size()));
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

bool is_diagonal_chain(const std::vector<Int> &d) {
  for (size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (d[i] == 0 && d[i + 1] != 0) return false;
    if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
  }
  return true;
}

} // namespace

TEST_CASE("smith normal form on the worked examples") {
  auto r = smith_normal_form(mat({{2, 4}, {6, 8}}));
  CHECK(r.diagonal == std::vector<Int>{2, 4});

  auto id = smith_normal_form(IntMatrix::identity(3));
  CHECK(id.diagonal == std::vector<Int>{1, 1, 1});

  auto z = smith_normal_form(IntMatrix(2, 2));
  CHECK(z.diagonal == std::vector<Int>{0, 0});

  auto e = smith_normal_form(IntMatrix(0, 0));
  CHECK(e.diagonal.empty());
}

TEST_CASE("smith normal form postconditions on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    long rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMatrix m(rows, cols);
    for (auto &v : m.a) v = static_cast<long>(rng() % 19) - 9;
    auto r = smith_normal_form(m);
    CHECK(is_diagonal_chain(r.diagonal));
    CHECK(abs(det(r.left)) == 1);
    CHECK(abs(det(r.right)) == 1);
    IntMatrix prod = r.left * m * r.right;
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j)
        CHECK(prod.at(i, j) == (i == j ? r.diagonal[i] : Int(0)));
    // |product of first k diagonal entries| = gcd of k x k minors.
    CHECK(oracle::snf_minor_gcd_check(m, r.diagonal));
  }
}

TEST_CASE("rank over fields") {
  CHECK(rank_mod_p(mat({{1, 1}, {1, 1}}), 2) == 1);
  CHECK(rank_over_rationals(mat({{2, 0}, {0, 2}})) == 2);
  CHECK(rank_mod_p(mat({{2, 0}, {0, 2}}), 2) == 0);
  CHECK(rank_over_rationals(mat({{1, 2}, {3, 4}})) == 2); // det = -2
  CHECK_THROWS_AS(rank_mod_p(mat({{1}}), 6), InvalidPrime);

  // rank over Q = number of nonzero SNF entries
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    long rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (auto &v : m.a) v = static_cast<long>(rng() % 7) - 3;
    auto r = smith_normal_form(m);
    long nz = 0;
    for (const auto &d : r.diagonal)
      if (d != 0) ++nz;
    CHECK(rank_over_rationals(m) == nz);
  }
}

TEST_CASE("betti_compare") {
  auto d12 = mat({{1, 0}, {0, 2}});
  auto r3 = betti_compare(d12, 3);
  CHECK(r3.rank_z == 2);
  CHECK(r3.rank_fp == 2);
  CHECK(r3.equal);
  auto r2 = betti_compare(d12, 2);
  CHECK(r2.rank_z == 2);
  CHECK(r2.rank_fp == 1);
  CHECK_FALSE(r2.equal);
  auto ri = betti_compare(IntMatrix::identity(4), 5);
  CHECK(ri.equal);
  CHECK_THROWS_AS(betti_compare(d12, 4), InvalidPrime);

  // equal is false exactly when a nonzero SNF entry is divisible by p.
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    long n = 1 + rng() % 4;
    IntMatrix m(n, n);
    for (auto &v : m.a) v = static_cast<long>(rng() % 13) - 6;
    for (long p : {2L, 3L, 5L}) {
      auto bc = betti_compare(m, p);
      auto snf = smith_normal_form(m);
      bool bad = false;
      for (const auto &d : snf.diagonal)
        if (d != 0 && d % p == 0) bad = true;
      CHECK(bc.equal == !bad);
    }
  }
}

TEST_CASE("laurent arithmetic basics") {
  LaurentPoly t = LaurentPoly::variable("t");
  LaurentPoly tinv = LaurentPoly::variable("t", -1);
  LaurentPoly p = t - LaurentPoly::constant(Rat(1)) + tinv;
  CHECK(p.eval_units({{"t", Rat(1)}}) == 1);
  CHECK((t + tinv) * t == t * t + LaurentPoly::constant(Rat(1)));
  LaurentPoly sym = t - LaurentPoly::constant(Rat(3)) + tinv;
  CHECK(sym.invert_vars() == sym);
  CHECK_THROWS_AS(p.eval_units({{"t", Rat(0)}}), InvalidUnit);

  // variable lists merge by union
  LaurentPoly s = LaurentPoly::variable("s");
  LaurentPoly q = s + t;
  CHECK(q.vars() == std::vector<std::string>{"s", "t"});
}

TEST_CASE("fraction_rank examples and invariances") {
  auto C = [](long v) { return LaurentPoly::constant(Rat(v)); };
  LaurentPoly t = LaurentPoly::variable("t");
  LaurentPoly s = LaurentPoly::variable("s");
  LaurentPoly t2inv = LaurentPoly::variable("t2", -1);

  CHECK(fraction_rank({{C(1) - t2inv}}, CoeffSpec::rationals()) == 1);
  CHECK(fraction_rank({{t, C(1)}, {t, C(1)}}, CoeffSpec::rationals()) == 1);
  CHECK(fraction_rank({{t, C(0)}, {C(0), s}}, CoeffSpec::rationals()) == 2);
  CHECK(fraction_rank({{C(1) - t2inv}}, CoeffSpec::mod_p(5)) == 1);

  std::mt19937 rng(17);
  auto random_poly = [&]() {
    LaurentPoly p;
    for (int k = 0; k < 3; ++k) {
      long c = static_cast<long>(rng() % 5) - 2;
      int e1 = static_cast<int>(rng() % 5) - 2;
      int e2 = static_cast<int>(rng() % 5) - 2;
      p = p + LaurentPoly::monomial(Rat(c), {"x", "y"}, {e1, e2});
    }
    return p;
  };
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<std::vector<LaurentPoly>> m(3, std::vector<LaurentPoly>(3));
    for (auto &row : m)
      for (auto &e : row) e = random_poly();
    long r0 = fraction_rank(m, CoeffSpec::rationals(), trial);
    // row permutation
    auto mp = m;
    std::swap(mp[0], mp[2]);
    CHECK(fraction_rank(mp, CoeffSpec::rationals(), trial) == r0);
    // multiply a row by a unit monomial
    auto mu = m;
    LaurentPoly unit = LaurentPoly::monomial(Rat(1), {"x", "y"}, {1, -2});
    for (auto &e : mu[1]) e = e * unit;
    CHECK(fraction_rank(mu, CoeffSpec::rationals(), trial) == r0);
    // deterministic across equal seeds
    CHECK(fraction_rank(m, CoeffSpec::rationals(), trial) == r0);
  }
}

TEST_CASE("certified enclosures of pi and trigonometric values") {
  for (int prec : {16, 32, 64}) {
    RatInterval pi = pi_enclosure(prec);
    CHECK(pi.lo > Rat(311, 100));
    CHECK(pi.hi < Rat(315, 100));
    CHECK(pi.width() <= Rat(1) / Rat(Int(1) << prec));
    CHECK(pi.contains(Rat("3141592653589793238462643383279502884197/"
                          "1000000000000000000000000000000000000000")));
  }
  // sin(pi/6) = 1/2, cos(pi/3) = 1/2, sin(pi/2) = 1, sin(pi) = 0
  CHECK(sin_pi(Rat(1, 6), 40).contains(Rat(1, 2)));
  CHECK(cos_pi(Rat(1, 3), 40).contains(Rat(1, 2)));
  CHECK(sin_pi(Rat(1, 2), 40).contains(Rat(1)));
  CHECK(sin_pi(Rat(1), 40).contains(Rat(0)));
  CHECK(sin_pi(Rat(7, 6), 40).contains(Rat(-1, 2))); // third quadrant
  CHECK(sin_pi(Rat(-1, 6), 40).contains(Rat(-1, 2))); // reduction below 0

  // tan(pi/4) = 1; tan(pi/3) = sqrt(3) bracketed against its square
  auto t4 = tan_pi(Rat(1, 4), 40);
  REQUIRE(t4.has_value());
  CHECK(t4->contains(Rat(1)));
  auto t3 = tan_pi(Rat(1, 3), 40);
  REQUIRE(t3.has_value());
  CHECK(t3->lo * t3->lo < 3);
  CHECK(t3->hi * t3->hi > 3);
  CHECK(t3->width() < Rat(1, 1 << 20));

  // 2 cos(2 pi f) = 1 at f = 1/6; the reachable f precision is set by the
  // width of z, and an over-ambitious target is refused rather than faked
  auto f = fraction_from_two_cos({Rat(999, 1000), Rat(1001, 1000)}, 8);
  REQUIRE(f.has_value());
  CHECK(f->contains(Rat(1, 6)));
  CHECK(f->width() <= Rat(1, 1 << 8));
  auto too_tight =
      fraction_from_two_cos({Rat(999, 1000), Rat(1001, 1000)}, 30);
  CHECK_FALSE(too_tight.has_value());
  auto tight = fraction_from_two_cos(
      {Rat("999999999999/1000000000000"), Rat("1000000000001/1000000000000")},
      30);
  REQUIRE(tight.has_value());
  CHECK(tight->contains(Rat(1, 6)));
}

TEST_CASE("simplest rational in an interval") {
  CHECK(simplest_rational_in(Rat(1), Rat(2)) == Rat(3, 2));
  CHECK(simplest_rational_in(Rat(-1), Rat(1)) == 0);
  CHECK(simplest_rational_in(Rat(17, 10), Rat(9, 5)) == Rat(7, 4));
  CHECK(simplest_rational_in(Rat(-9, 5), Rat(-17, 10)) == Rat(-7, 4));
  CHECK(simplest_rational_in(Rat(3), Rat(8)) == Rat(4));
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    Rat lo(static_cast<long>(rng() % 2001) - 1000,
           1 + static_cast<long>(rng() % 60));
    lo.canonicalize();
    Rat w(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 60));
    Rat hi = lo + w;
    Rat s = simplest_rational_in(lo, hi);
    CHECK(lo < s);
    CHECK(s < hi);
  }
}

TEST_CASE("sturm counting and cyclotomics") {
  // (x^2 - 2)(x - 3): roots -sqrt2, sqrt2, 3
  RatPoly p;
  p.c = {Rat(6), Rat(-2), Rat(-3), Rat(1)};
  CHECK(sturm_count_all(p) == 3);
  CHECK(sturm_count(p, Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(p, Rat(-2), Rat(2)) == 2);

  CHECK(cyclotomic(1).c == std::vector<Rat>{-1, 1});
  CHECK(cyclotomic(2).c == std::vector<Rat>{1, 1});
  CHECK(cyclotomic(6).c == std::vector<Rat>{1, -1, 1});
  CHECK(cyclotomic(12).degree() == 4);

  // symmetric_to_z: t^2 - t + 1 at z = t + 1/t  ->  z - 1
  RatPoly tre;
  tre.c = {Rat(1), Rat(-1), Rat(1)};
  RatPoly z = symmetric_to_z(tre);
  CHECK(z.c == std::vector<Rat>{-1, 1});
}
