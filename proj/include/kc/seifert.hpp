#pragma once
#include "kc/enclosure.hpp"
#include "kc/intmatrix.hpp"
#include "kc/laurent.hpp"

#include <memory>
#include <optional>
#include <string>

namespace kc {

// omega = e^{2 pi i r/d}; the pair is kept as given so sums over r = 0..d-1
// index directly.
struct RootOfUnity {
  long d = 1;
  long r = 0;
};

// Seifert matrix of a knot: even size 2g with det(A - A^T) = 1.
class SeifertMatrix {
public:
  static SeifertMatrix from_matrix(IntMatrix A,
                                   std::optional<std::string> name = {},
                                   std::optional<long> crossing_number = {});

  long size() const { return A_.rows; }
  long genus() const { return A_.rows / 2; }
  const IntMatrix &matrix() const { return A_; }
  const std::optional<std::string> &name() const { return name_; }
  const std::optional<long> &crossing_number() const {
    return crossing_number_;
  }

  friend bool operator==(const SeifertMatrix &a, const SeifertMatrix &b) {
    return a.A_ == b.A_;
  }

private:
  IntMatrix A_;
  std::optional<std::string> name_;
  std::optional<long> crossing_number_;
};

SeifertMatrix unknot();
SeifertMatrix trefoil();
SeifertMatrix figure_eight();
SeifertMatrix torus_knot_2(long odd_n); // T(2, n) for odd n >= 3
SeifertMatrix twist_knot(long n);       // [[-1, 1], [0, n]]
SeifertMatrix mirror(const SeifertMatrix &k);
// Concordance inverse -K; at the Seifert-form level this is the mirror.
SeifertMatrix concordance_inverse(const SeifertMatrix &k);
SeifertMatrix connected_sum(const SeifertMatrix &a, const SeifertMatrix &b);
std::optional<SeifertMatrix> named_knot(const std::string &name);

// Alexander polynomial, symmetric normalization: D(1/t) = D(t), D(1) = 1.
LaurentPoly alexander_poly(const SeifertMatrix &k);
// The integer polynomial t^h * Delta with nonzero constant term (palindromic
// of even degree 2h); carrier for all root-location work.
RatPoly alexander_core(const SeifertMatrix &k);
long alexander_span(const SeifertMatrix &k);         // top - bottom exponent
Int alexander_top_coefficient(const SeifertMatrix &k);

long signature(const SeifertMatrix &k); // signature of A + A^T
int arf(const SeifertMatrix &k);        // Delta(-1) = +-1 mod 8 criterion

struct LtResult {
  long value = 0;
  bool regular = true;
};

// Exact Levine-Tristram signature.  Regularity (Delta(omega) != 0) is decided
// by cyclotomic divisibility; values at regular omega come from an exact
// rational congruence signature of the Cayley pencil t*(A+A^T) + i(A^T-A) at
// a certified root-free rational t; singular omega get the average of the
// one-sided arc values.
LtResult lt_signature(const SeifertMatrix &k, const RootOfUnity &omega);

// Per-matrix engine caching the pencil and Alexander data across many omega.
// Block sums decompose: signatures add over the irreducible diagonal blocks
// (also through one-sided limits), so large connected sums cost no more than
// their distinct small blocks.
class SignatureEngine {
public:
  explicit SignatureEngine(const SeifertMatrix &k);
  ~SignatureEngine();
  SignatureEngine(SignatureEngine &&) noexcept;
  SignatureEngine &operator=(SignatureEngine &&) noexcept;

  LtResult at(const RootOfUnity &omega) const;
  const RatPoly &core() const; // t^h Delta
  // Signature on the arc strictly between circle fractions; `frac` must not
  // be a jump point.
  long at_fraction(const Rat &frac) const;

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// One jump point of the signature step function on the circle, as a fraction
// of a full turn in (0, 1).
struct JumpPoint {
  bool rational = true;
  Rat fraction;            // exact when rational
  RatInterval enclosure;   // always valid; equals [fraction, fraction] above
  long cyclotomic_order = 0; // d with Phi_d | Delta, 0 for irrational jumps
};

struct CircleProfile {
  std::vector<JumpPoint> jumps; // sorted by position
  std::vector<long> sigma;      // sigma[i]: value on the arc after jumps[i]
  long sigma_at_one = 0;        // value on the arc through omega = 1
  bool all_rational = true;
};

// Full arc decomposition of the signature function; irrational jump
// enclosures have width <= 2^-prec.
CircleProfile lt_profile(const SeifertMatrix &k, int prec = 32);

} // namespace kc
