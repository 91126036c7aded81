#include "kc/intmatrix.hpp"

#include "kc/errors.hpp"

#include <cassert>

namespace kc {

IntMatrix IntMatrix::identity(long n) {
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix &x, const IntMatrix &y) {
  assert(x.cols == y.rows);
  IntMatrix r(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (long j = 0; j < y.cols; ++j)
        r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix &x, const IntMatrix &y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  IntMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

IntMatrix operator-(const IntMatrix &x) {
  IntMatrix r = x;
  for (auto &v : r.a) v = -v;
  return r;
}

IntMatrix operator-(const IntMatrix &x, const IntMatrix &y) {
  assert(x.rows == y.rows && x.cols == y.cols);
  IntMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

namespace {

void swap_rows(IntMatrix &m, long i, long j) {
  for (long c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}
void swap_cols(IntMatrix &m, long i, long j) {
  for (long r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}
// row i -= q * row k
void row_axpy(IntMatrix &m, long i, long k, const Int &q) {
  if (q == 0) return;
  for (long c = 0; c < m.cols; ++c) m.at(i, c) -= q * m.at(k, c);
}
void col_axpy(IntMatrix &m, long j, long k, const Int &q) {
  if (q == 0) return;
  for (long r = 0; r < m.rows; ++r) m.at(r, j) -= q * m.at(r, k);
}

} // namespace

SnfResult smith_normal_form(const IntMatrix &input) {
  IntMatrix m = input;
  IntMatrix L = IntMatrix::identity(m.rows);
  IntMatrix R = IntMatrix::identity(m.cols);
  long n = std::min(m.rows, m.cols);

  for (long k = 0; k < n; ++k) {
    for (;;) {
      // Minimal-absolute-value nonzero pivot in the trailing submatrix.
      long pi = -1, pj = -1;
      Int best;
      for (long i = k; i < m.rows; ++i)
        for (long j = k; j < m.cols; ++j) {
          const Int &v = m.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) goto done; // trailing block is zero
      if (pi != k) {
        swap_rows(m, k, pi);
        swap_rows(L, k, pi);
      }
      if (pj != k) {
        swap_cols(m, k, pj);
        swap_cols(R, k, pj);
      }

      bool dirty = false;
      for (long i = k + 1; i < m.rows; ++i) {
        if (m.at(i, k) == 0) continue;
        Int q = m.at(i, k) / m.at(k, k); // truncated; remainder is smaller
        row_axpy(m, i, k, q);
        row_axpy(L, i, k, q);
        if (m.at(i, k) != 0) dirty = true;
      }
      for (long j = k + 1; j < m.cols; ++j) {
        if (m.at(k, j) == 0) continue;
        Int q = m.at(k, j) / m.at(k, k);
        col_axpy(m, j, k, q);
        col_axpy(R, j, k, q);
        if (m.at(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the submatrix for the divisor chain.
      bool fixed = true;
      for (long i = k + 1; i < m.rows && fixed; ++i)
        for (long j = k + 1; j < m.cols && fixed; ++j)
          if (m.at(i, j) % m.at(k, k) != 0) {
            for (long c = 0; c < m.cols; ++c) m.at(k, c) += m.at(i, c);
            for (long c = 0; c < L.cols; ++c) L.at(k, c) += L.at(i, c);
            fixed = false;
          }
      if (fixed) break;
    }
    if (m.at(k, k) < 0) {
      for (long c = 0; c < m.cols; ++c) m.at(k, c) = -m.at(k, c);
      for (long c = 0; c < L.cols; ++c) L.at(k, c) = -L.at(k, c);
    }
  }
done:
  SnfResult res;
  res.diagonal.reserve(n);
  for (long k = 0; k < n; ++k) res.diagonal.push_back(m.at(k, k));
  res.left = std::move(L);
  res.right = std::move(R);
  return res;
}

Int det(const IntMatrix &input) {
  assert(input.rows == input.cols);
  long n = input.rows;
  if (n == 0) return 1;
  IntMatrix m = input;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      swap_rows(m, k, piv);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev; // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

long rank_over_rationals(const IntMatrix &input) {
  IntMatrix m = input;
  long rank = 0;
  long row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long piv = -1;
    for (long i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    swap_rows(m, row, piv);
    for (long i = row + 1; i < m.rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Int g = gcd(m.at(i, col), m.at(row, col));
      Int fi = m.at(row, col) / g, fr = m.at(i, col) / g;
      for (long j = col; j < m.cols; ++j)
        m.at(i, j) = m.at(i, j) * fi - m.at(row, j) * fr;
    }
    ++row;
    ++rank;
  }
  return rank;
}

long rank_mod_p(const IntMatrix &input, long p) {
  if (!is_prime_int(p)) throw InvalidPrime("p = " + std::to_string(p));
  IntMatrix m = input;
  Int P(p);
  for (auto &v : m.a) {
    v %= P;
    if (v < 0) v += P;
  }
  long rank = 0, row = 0;
  for (long col = 0; col < m.cols && row < m.rows; ++col) {
    long piv = -1;
    for (long i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    swap_rows(m, row, piv);
    Int inv;
    mpz_invert(inv.get_mpz_t(), m.at(row, col).get_mpz_t(), P.get_mpz_t());
    for (long j = col; j < m.cols; ++j) m.at(row, j) = m.at(row, j) * inv % P;
    for (long i = row + 1; i < m.rows; ++i) {
      Int f = m.at(i, col);
      if (f == 0) continue;
      for (long j = col; j < m.cols; ++j) {
        m.at(i, j) = (m.at(i, j) - f * m.at(row, j)) % P;
        if (m.at(i, j) < 0) m.at(i, j) += P;
      }
    }
    ++row;
    ++rank;
  }
  return rank;
}

BettiCompare betti_compare(const IntMatrix &m, long p) {
  if (!is_prime_int(p)) throw InvalidPrime("p = " + std::to_string(p));
  BettiCompare r;
  r.rank_z = rank_over_rationals(m);
  r.rank_fp = rank_mod_p(m, p);
  r.equal = (r.rank_z == r.rank_fp);
  return r;
}

Inertia symmetric_inertia(std::vector<std::vector<Rat>> m) {
  long n = static_cast<long>(m.size());
  Inertia res;
  for (long k = 0; k < n; ++k) {
    // Find a nonzero diagonal pivot at or after k.
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (m[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // All-zero diagonal: look for an off-diagonal entry; if none, the
      // trailing block is zero.
      long oi = -1, oj = -1;
      for (long i = k; i < n && oi < 0; ++i)
        for (long j = i + 1; j < n; ++j)
          if (m[i][j] != 0) {
            oi = i;
            oj = j;
            break;
          }
      if (oi < 0) {
        res.zero += n - k;
        return res;
      }
      // Congruence x_oi <- x_oi + x_oj turns the diagonal entry into
      // 2 m[oi][oj] != 0.
      for (long c = 0; c < n; ++c) m[oi][c] += m[oj][c];
      for (long r2 = 0; r2 < n; ++r2) m[r2][oi] += m[r2][oj];
      piv = oi;
    }
    if (piv != k) {
      std::swap(m[piv], m[k]);
      for (long r2 = 0; r2 < n; ++r2) std::swap(m[r2][piv], m[r2][k]);
    }
    Rat d = m[k][k];
    if (d > 0)
      ++res.pos;
    else
      ++res.neg;
    for (long i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / d;
      for (long j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      for (long j = k; j < n; ++j) m[j][i] -= f * m[j][k];
    }
  }
  return res;
}

namespace {

// Arithmetic on Gaussian-rational polynomials a + b i used only inside the
// fraction-free pencil determinant.
ComplexPoly cmul(const ComplexPoly &x, const ComplexPoly &y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
ComplexPoly csub(const ComplexPoly &x, const ComplexPoly &y) {
  return {x.re - y.re, x.im - y.im};
}
bool czero(const ComplexPoly &x) { return x.re.is_zero() && x.im.is_zero(); }
ComplexPoly cdiv_exact(const ComplexPoly &num, const ComplexPoly &den) {
  // num / den = num * conj(den) / |den|^2, all divisions exact by Bareiss.
  RatPoly norm = den.re * den.re + den.im * den.im;
  ComplexPoly t = cmul(num, {den.re, -den.im});
  return {exact_div(t.re, norm), exact_div(t.im, norm)};
}

} // namespace

ComplexPoly pencil_det(const IntMatrix &S, const IntMatrix &T) {
  assert(S.rows == S.cols && T.rows == T.cols && S.rows == T.rows);
  long n = S.rows;
  if (n == 0) return {RatPoly(Rat(1)), RatPoly()};
  std::vector<std::vector<ComplexPoly>> m(n, std::vector<ComplexPoly>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      m[i][j].re = RatPoly::monomial(Rat(S.at(i, j)), 1);
      m[i][j].im = RatPoly(Rat(T.at(i, j)));
    }
  ComplexPoly prev{RatPoly(Rat(1)), RatPoly()};
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (czero(m[k][k])) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (!czero(m[i][k])) {
          piv = i;
          break;
        }
      if (piv < 0) return {RatPoly(), RatPoly()};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        ComplexPoly num =
            csub(cmul(m[i][j], m[k][k]), cmul(m[i][k], m[k][j]));
        m[i][j] = cdiv_exact(num, prev);
      }
    prev = m[k][k];
  }
  ComplexPoly d = m[n - 1][n - 1];
  if (sign < 0) d = {-d.re, -d.im};
  return d;
}

} // namespace kc
