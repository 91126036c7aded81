#pragma once
#include "kc/freeword.hpp"
#include "kc/laurent.hpp"

#include <map>
#include <optional>

namespace kc {

// Free differential calculus in the right-divided convention
//   d_i(x_j) = delta_ij,   d_i(gh) = d_i(g) + d_i(h) g^{-1},
// so in particular d_i(x_i^{-1}) = -x_i.

// Integer group-ring element, a finite sum of words.
using WordSum = std::map<FreeWord, Int>;

WordSum fox_derivative(const FreeWord &w, int i); // throws IndexOutOfRange

WordSum ws_add(const WordSum &a, const WordSum &b);
// a * w^{-1} (right translation used by the product rule).
WordSum ws_translate_right_inv(const WordSum &a, const FreeWord &w);
Int ws_augmentation(const WordSum &a);

// Abelianization: each word becomes the monomial of its exponent vector in
// t1..t_rank.  Mod-p coefficients are reduced into [0, p).
LaurentPoly project_level1(const WordSum &s, const CoeffSpec &coeff,
                           int rank = 0);

// Inductive tuple collections.  At level 0 the single tuple is the
// generating set; at level n >= 1 tuples have 2g-1 entries lying in F^(n).
struct Tuple {
  std::vector<std::shared_ptr<const CommExpr>> exprs;
  std::vector<FreeWord> words;
};

struct TupleCollection {
  int level = 0;
  int genus = 0;
  Int full_count;            // closed-form size of the full collection
  bool truncated = false;    // true when a limit cut enumeration short
  std::vector<Tuple> tuples; // deterministic lexicographic order
};

TupleCollection tuples_P(int n, int g,
                         std::optional<long> limit = std::nullopt);

struct IndependenceResult {
  bool independent = false;
  long rank = 0;
  std::vector<std::vector<LaurentPoly>> matrix; // [i][j] = d_j(w_i) abelianized
};

// Level-1 test of right linear independence of the Fox-derivative vectors of
// a (2g-1)-tuple.  Level >= 2 quotients are not implemented and rejected.
IndependenceResult independence_test(const std::vector<FreeWord> &tuple,
                                     const CoeffSpec &coeff,
                                     std::uint64_t seed = 0);

struct WedgeRankResult {
  long computed = 0;
  long expected = 0;
  bool matches = false;
};

// First-homology rank of a wedge of m circles with coefficients twisted
// through generator i -> z^{images[i]} in Z^k: kernel rank of the 1 x m
// boundary over the fraction field, compared with m - 1.
WedgeRankResult wedge_rank_check(long m,
                                 const std::vector<std::vector<long>> &images,
                                 const CoeffSpec &coeff,
                                 std::uint64_t seed = 0);

} // namespace kc
