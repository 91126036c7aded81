#pragma once
#include "kc/poly.hpp"

#include <vector>

namespace kc {

// Dense matrix of arbitrary-precision integers, row-major.
struct IntMatrix {
  long rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(long r, long c) : rows(r), cols(c), a(r * c, Int(0)) {}
  static IntMatrix identity(long n);

  Int &at(long r, long c) { return a[r * cols + c]; }
  const Int &at(long r, long c) const { return a[r * cols + c]; }

  IntMatrix transpose() const;
  friend bool operator==(const IntMatrix &x, const IntMatrix &y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y);
IntMatrix operator+(const IntMatrix &x, const IntMatrix &y);
IntMatrix operator-(const IntMatrix &x, const IntMatrix &y);
IntMatrix operator-(const IntMatrix &x);

// left * m * right diagonal with d_1 | d_2 | ... , d_i >= 0, transforms
// unimodular.  Pivoting picks the minimal-absolute-value nonzero entry.
struct SnfResult {
  std::vector<Int> diagonal; // length min(rows, cols)
  IntMatrix left, right;
};
SnfResult smith_normal_form(const IntMatrix &m);

Int det(const IntMatrix &m); // Bareiss, square input

long rank_over_rationals(const IntMatrix &m);
long rank_mod_p(const IntMatrix &m, long p); // throws InvalidPrime

struct BettiCompare {
  long rank_z = 0, rank_fp = 0;
  bool equal = false;
};
BettiCompare betti_compare(const IntMatrix &m, long p);

// Exact inertia of a symmetric matrix with rational entries, by congruence
// diagonalization.
struct Inertia {
  long pos = 0, neg = 0, zero = 0;
  long signature() const { return pos - neg; }
};
Inertia symmetric_inertia(std::vector<std::vector<Rat>> m);

// det(t*S + i*T) of the hermitian pencil with integer S (symmetric) and T
// (skew), as real and imaginary integer polynomials in t.  Fraction-free.
struct ComplexPoly {
  RatPoly re, im;
};
ComplexPoly pencil_det(const IntMatrix &S, const IntMatrix &T);

} // namespace kc
