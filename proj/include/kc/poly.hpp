#pragma once
#include <gmpxx.h>
#include <vector>

namespace kc {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Q, coefficients low-to-high.  Zero is the
// empty vector.  This is the workhorse behind Alexander polynomials,
// cyclotomic tests, Sturm chains and the signature pencil.
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(Rat v) { if (v != 0) c = {std::move(v)}; }
  static RatPoly monomial(Rat v, int deg);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rat(0);
  }
  Rat lead() const { return c.empty() ? Rat(0) : c.back(); }
  void trim();

  friend bool operator==(const RatPoly &a, const RatPoly &b) { return a.c == b.c; }
};

RatPoly operator+(const RatPoly &a, const RatPoly &b);
RatPoly operator-(const RatPoly &a, const RatPoly &b);
RatPoly operator*(const RatPoly &a, const RatPoly &b);
RatPoly operator*(const RatPoly &a, const Rat &s);
RatPoly operator-(const RatPoly &a);

Rat eval(const RatPoly &p, const Rat &x);
RatPoly derivative(const RatPoly &p);
// Euclidean division; q, r with a = q*b + r, deg r < deg b.
void divmod(const RatPoly &a, const RatPoly &b, RatPoly &q, RatPoly &r);
RatPoly poly_gcd(RatPoly a, RatPoly b); // monic gcd, 0 for both zero
bool divides(const RatPoly &d, const RatPoly &a);
RatPoly make_monic(RatPoly p);
// Exact quotient; asserts divisibility.
RatPoly exact_div(const RatPoly &a, const RatPoly &b);

// Squarefree part p / gcd(p, p').
RatPoly squarefree_part(const RatPoly &p);

// Number of distinct real roots of squarefree p in (lo, hi].
int sturm_count(const RatPoly &p, const Rat &lo, const Rat &hi);
// Count over all of R.
int sturm_count_all(const RatPoly &p);

// d-th cyclotomic polynomial over Z (returned with rational coeffs).
const RatPoly &cyclotomic(int d);

// For a symmetric Laurent polynomial with integer span [-h, h] given by the
// coefficient list of t^h * p (degree 2h), return q of degree h with
// q(t + 1/t) = p(t) * t^h.  Used to locate unit-circle roots: t = e^{i a}
// corresponds to z = 2 cos a in [-2, 2].
RatPoly symmetric_to_z(const RatPoly &p_shifted);

// The rational with the smallest denominator (then numerator) strictly
// inside (lo, hi).  Keeps signature samples small after interval refinement.
Rat simplest_rational_in(const Rat &lo, const Rat &hi);

bool is_prime_int(long p);

} // namespace kc
