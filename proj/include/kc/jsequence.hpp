#pragma once
#include "kc/errors.hpp"
#include "kc/rho.hpp"
#include "kc/seifert.hpp"

#include <string>
#include <vector>

namespace kc {

struct CandidateFamily {
  std::vector<SeifertMatrix> generators; // each carries its name
  long max_summands = 6;
};

// Twist- and torus-knot generators with their mirrors; enough signature
// variety for two-term searches at desk scale.
CandidateFamily default_family();

// One term of the expression N * (Q # -Q') or N * Q, kept symbolically as
// generator-name multiples alongside the realized matrix.
struct JItem {
  std::vector<std::pair<long, std::string>> expression;
  SeifertMatrix matrix;
  long prime = 0;
  Int rho_self;                 // rho_finite(matrix, prime)
  std::vector<Int> rho_earlier; // values at the earlier primes, all zero
  int arf_value = 0;
  bool grope2_assumed = true; // grope-of-height-2 is an assumption flag
};

struct JSequence {
  std::vector<JItem> items;
  Rat constant; // the C the sequence was built for
};

struct VerifyEntry {
  std::string condition;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_pass = true;
};

class SearchExhaustedSeq : public domain_error {
public:
  SearchExhaustedSeq(const std::string &msg, JSequence partial)
      : domain_error("SearchExhausted", msg), partial_(std::move(partial)) {}
  const JSequence &partial() const { return partial_; }

private:
  JSequence partial_;
};

// Search increasing odd primes, then summand counts, for items with
//   rho_finite(J_i, p_i) > C   (all summands regular),
//   rho_finite(J_i, p_j) = 0   exactly, for j < i,
//   arf(J_i) = 0,
// verifying everything with exact arithmetic.  Throws SearchExhaustedSeq
// carrying the best partial sequence.
JSequence find_sequence(const Rat &C, long count, const CandidateFamily &fam,
                        long prime_max, long prime_min = 3);

// Independent re-verification of every stored condition.
VerifyReport verify_sequence(const JSequence &seq);

std::string expr_to_string(const std::vector<std::pair<long, std::string>> &e);

} // namespace kc
