#include "kc/errors.hpp"
#include "kc/fox.hpp"

#include <doctest.h>
#include <random>

using namespace kc;

namespace {

FreeWord random_word(std::mt19937 &rng, int rank, int len) {
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) {
    int g = 1 + static_cast<int>(rng() % rank);
    letters.push_back(rng() % 2 ? g : -g);
  }
  return FreeWord(std::move(letters));
}

LaurentPoly tvar(int i, int e = 1) {
  return LaurentPoly::variable("t" + std::to_string(i), e);
}

} // namespace

TEST_CASE("word parsing and reduction") {
  CHECK(FreeWord::parse("x1X1").is_identity());
  CHECK(FreeWord::parse("abAB") == FreeWord::parse("x1x2X1X2"));
  CHECK(FreeWord::parse("x1x2").inverse() == FreeWord::parse("X2X1"));
  CHECK(FreeWord::parse("aB").str_letters() == "aB");
  FreeWord w = FreeWord::parse("x2");
  CHECK(w.conjugate(FreeWord::parse("x1")) == FreeWord::parse("X1x2x1"));
  CHECK(FreeWord::commutator(FreeWord::parse("x1"), FreeWord::parse("x2")) ==
        FreeWord::parse("x1x2X1X2"));
}

TEST_CASE("fox derivative defining rules and worked examples") {
  // d_i(x_j) = delta_ij
  WordSum d11 = fox_derivative(FreeWord::parse("x1"), 1);
  REQUIRE(d11.size() == 1);
  CHECK(d11.begin()->first.is_identity());
  CHECK(d11.begin()->second == 1);
  CHECK(fox_derivative(FreeWord::parse("x2"), 1).empty());

  // d_1(x_1^{-1}) = -x_1
  WordSum dinv = fox_derivative(FreeWord::parse("X1"), 1);
  REQUIRE(dinv.size() == 1);
  CHECK(dinv.begin()->first == FreeWord::parse("x1"));
  CHECK(dinv.begin()->second == -1);

  // d_1([x_1, x_2]) = 1 - x_1 x_2^{-1} x_1^{-1}
  WordSum dc = fox_derivative(FreeWord::parse("x1x2X1X2"), 1);
  WordSum expected;
  expected[FreeWord()] = 1;
  expected[FreeWord::parse("x1X2X1")] = -1;
  CHECK(dc == expected);

  CHECK_THROWS_AS(fox_derivative(FreeWord::parse("x1"), 0), IndexOutOfRange);
}

TEST_CASE("product rule property, 1000 random pairs") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 1000; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 5); // 2g <= 6
    FreeWord u = random_word(rng, rank, 1 + rng() % 8);
    FreeWord v = random_word(rng, rank, 1 + rng() % 8);
    int i = 1 + static_cast<int>(rng() % rank);
    WordSum lhs = fox_derivative(u * v, i);
    WordSum rhs =
        ws_add(fox_derivative(u, i),
               ws_translate_right_inv(fox_derivative(v, i), u));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("augmentation equals signed occurrence count") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 3);
    FreeWord w = random_word(rng, rank, 1 + rng() % 10);
    for (int i = 1; i <= rank; ++i) {
      Int expect(w.exponent_vector(rank)[i - 1]);
      CHECK(ws_augmentation(fox_derivative(w, i)) == expect);
    }
  }
}

TEST_CASE("level-1 projection") {
  // project(d_1([x_1,x_2])) = 1 - t_2^{-1}
  LaurentPoly p = project_level1(
      fox_derivative(FreeWord::parse("x1x2X1X2"), 1), CoeffSpec::rationals(),
      2);
  CHECK(p == LaurentPoly::constant(Rat(1)) - tvar(2, -1));

  CHECK(project_level1(WordSum{}, CoeffSpec::rationals()).is_zero());

  // project(d_2(x_1 x_2)) = t_1^{-1}
  LaurentPoly q = project_level1(fox_derivative(FreeWord::parse("x1x2"), 2),
                                 CoeffSpec::rationals(), 2);
  CHECK(q == tvar(1, -1));
}

TEST_CASE("tuple collections") {
  // level 0: the single tuple is the generating set
  auto p0 = tuples_P(0, 2);
  CHECK(p0.full_count == 1);
  REQUIRE(p0.tuples.size() == 1);
  REQUIRE(p0.tuples[0].words.size() == 4);
  CHECK(p0.tuples[0].words[0] == FreeWord::parse("x1"));
  CHECK(p0.tuples[0].words[3] == FreeWord::parse("x4"));

  // g = 2, n = 1: 4 tuples of size 3
  auto p1 = tuples_P(1, 2);
  CHECK(p1.full_count == 4);
  REQUIRE(p1.tuples.size() == 4);
  for (const auto &t : p1.tuples) CHECK(t.words.size() == 3);

  // g = 1, n = 1: {[x1,x2]} and {[x2,x1]}
  auto q1 = tuples_P(1, 1);
  REQUIRE(q1.tuples.size() == 2);
  CHECK(q1.tuples[0].words[0] == FreeWord::parse("x1x2X1X2"));
  CHECK(q1.tuples[1].words[0] == FreeWord::parse("x2x1X2X1"));

  // g = 2, n = 2: 4 * 5^3 = 500
  auto p2 = tuples_P(2, 2);
  CHECK(p2.full_count == 500);
  CHECK(p2.tuples.size() == 500);
  CHECK_FALSE(p2.truncated);

  // counts for g <= 2, n <= 3 match the closed formula by enumeration
  auto p3 = tuples_P(3, 1);
  CHECK(p3.full_count == 2); // (4g-3)^(2g-1) = 1 at g = 1
  CHECK(p3.tuples.size() == 2);
  auto p3b = tuples_P(3, 2, 700);
  CHECK(p3b.full_count == Int(500) * 125);
  CHECK(p3b.truncated);
  CHECK(p3b.tuples.size() == 700);

  // depth: every word of P_n lies in F^(n)
  for (const auto &t : p2.tuples)
    for (size_t i = 0; i < t.words.size(); ++i) {
      CHECK(t.exprs[i]->depth() >= 2);
      CHECK(in_derived_subgroup(t.words[i], 4, 2));
    }
  for (const auto &t : p1.tuples)
    for (const auto &w : t.words) CHECK(in_derived_subgroup(w, 4, 1));

  CHECK_THROWS_AS(tuples_P(1, 2, 0), LimitZero);
}

TEST_CASE("level-1 independence") {
  auto g1 = tuples_P(1, 1);
  auto r = independence_test(g1.tuples[0].words, CoeffSpec::rationals());
  CHECK(r.independent);
  CHECK(r.rank == 1);
  auto r5 = independence_test(g1.tuples[0].words, CoeffSpec::mod_p(5));
  CHECK(r5.independent);

  // identity words: zero matrix
  std::vector<FreeWord> idw = {FreeWord(), FreeWord(), FreeWord()};
  auto rz = independence_test(idw, CoeffSpec::rationals());
  CHECK_FALSE(rz.independent);
  CHECK(rz.rank == 0);

  // permutation invariance (unordered tuples)
  auto p1 = tuples_P(1, 2);
  auto words = p1.tuples[0].words;
  auto base = independence_test(words, CoeffSpec::rationals());
  std::swap(words[0], words[2]);
  auto perm = independence_test(words, CoeffSpec::rationals());
  CHECK(base.independent == perm.independent);
  CHECK(base.rank == perm.rank);

  CHECK_THROWS_AS(independence_test({FreeWord::parse("x1"), FreeWord()},
                                    CoeffSpec::rationals()),
                  WrongTupleSize);
}

TEST_CASE("wedge rank") {
  // m = 2, both generators -> t
  auto r2 = wedge_rank_check(2, {{1}, {1}}, CoeffSpec::rationals());
  CHECK(r2.computed == 1);
  CHECK(r2.matches);

  // m = 3, images (t, t, 1)
  auto r3 = wedge_rank_check(3, {{1}, {1}, {0}}, CoeffSpec::rationals());
  CHECK(r3.computed == 2);
  CHECK(r3.matches);

  auto rp = wedge_rank_check(3, {{2}, {-1}, {3}}, CoeffSpec::mod_p(3));
  CHECK(rp.computed == 2);
  CHECK(rp.matches);

  CHECK_THROWS_AS(wedge_rank_check(2, {{0}, {0}}, CoeffSpec::rationals()),
                  TrivialSystem);
}

TEST_CASE("derived subgroup membership") {
  CHECK(in_derived_subgroup(FreeWord::parse("x1x2X1X2"), 2, 1));
  CHECK_FALSE(in_derived_subgroup(FreeWord::parse("x1"), 2, 1));
  CHECK_FALSE(in_derived_subgroup(FreeWord::parse("x1x2X1X2"), 2, 2));
  // [[x1,x2],[x1,x3]] is in F^(2); its depth-3 non-membership cannot be
  // certified syntactically and is refused rather than guessed.
  FreeWord c1 = FreeWord::commutator(FreeWord::parse("x1"), FreeWord::parse("x2"));
  FreeWord c2 = FreeWord::commutator(FreeWord::parse("x1"), FreeWord::parse("x3"));
  FreeWord w2 = FreeWord::commutator(c1, c2);
  CHECK(in_derived_subgroup(w2, 3, 2));
  CHECK_THROWS_AS(in_derived_subgroup(w2, 3, 3), UnsupportedLevel);
  // a genuine depth-3 word is certified by the structural search
  FreeWord w3 = FreeWord::commutator(w2, w2.conjugate(FreeWord::parse("x3")));
  CHECK_FALSE(w3.is_identity());
  CHECK(in_derived_subgroup(w3, 3, 3));
}
