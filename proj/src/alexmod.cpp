#include "kc/alexmod.hpp"

#include <cassert>

namespace kc {

UPoly UPoly::constant(Rat v) {
  UPoly p;
  if (v != 0) p.c = {std::move(v)};
  return p;
}

UPoly UPoly::monomial(Rat v, int deg) {
  UPoly p;
  if (v == 0) return p;
  p.c.assign(deg + 1, Rat(0));
  p.c[deg] = std::move(v);
  return p;
}

Rat FieldCtx::norm(const Rat &a) const {
  return spec.is_modp() ? modp_normalize(a, spec.p) : a;
}

Rat FieldCtx::inv(const Rat &a) const {
  Rat n = norm(a);
  assert(n != 0);
  return norm(1 / n);
}

UPoly u_normalize(UPoly a, const FieldCtx &F) {
  for (auto &x : a.c) x = F.norm(x);
  a.trim();
  return a;
}

UPoly u_add(const UPoly &a, const UPoly &b, const FieldCtx &F) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  return u_normalize(std::move(r), F);
}

UPoly u_sub(const UPoly &a, const UPoly &b, const FieldCtx &F) {
  UPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  return u_normalize(std::move(r), F);
}

UPoly u_mul(const UPoly &a, const UPoly &b, const FieldCtx &F) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  return u_normalize(std::move(r), F);
}

void u_divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r,
              const FieldCtx &F) {
  assert(!b.is_zero());
  q = UPoly();
  r = a;
  int db = b.degree();
  Rat lead_inv = F.inv(b.c.back());
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = F.norm(r.c.back() * lead_inv);
    if (q.c.size() < static_cast<size_t>(k + 1)) q.c.resize(k + 1, Rat(0));
    q.c[k] = F.norm(q.c[k] + f);
    for (int i = 0; i <= db; ++i)
      r.c[k + i] = F.norm(r.c[k + i] - f * b.c[i]);
    r.trim();
  }
  q.trim();
}

bool u_divides(const UPoly &d, const UPoly &a, const FieldCtx &F) {
  if (a.is_zero()) return true;
  if (d.is_zero()) return false;
  UPoly q, r;
  u_divmod(a, d, q, r, F);
  return r.is_zero();
}

UPoly u_make_monic(UPoly a, const FieldCtx &F) {
  if (a.is_zero()) return a;
  Rat inv = F.inv(a.c.back());
  for (auto &x : a.c) x = F.norm(x * inv);
  return a;
}

UPoly u_strip_unit(UPoly a) {
  if (a.is_zero()) return a;
  size_t low = 0;
  while (low < a.c.size() && a.c[low] == 0) ++low;
  a.c.erase(a.c.begin(), a.c.begin() + low);
  return a;
}

bool u_is_unit(const UPoly &a) {
  UPoly s = u_strip_unit(a);
  return s.degree() == 0;
}

std::vector<UPoly> u_mat_vec(const UMatrix &m, const std::vector<UPoly> &v,
                             const FieldCtx &F) {
  std::vector<UPoly> r(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    assert(m[i].size() == v.size());
    UPoly acc;
    for (size_t j = 0; j < v.size(); ++j)
      acc = u_add(acc, u_mul(m[i][j], v[j], F), F);
    r[i] = std::move(acc);
  }
  return r;
}

namespace {

UMatrix u_identity(size_t n) {
  UMatrix m(n, std::vector<UPoly>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = UPoly::constant(Rat(1));
  return m;
}

} // namespace

USmith u_smith(UMatrix m, const FieldCtx &F) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  USmith res;
  res.L = u_identity(rows);
  res.Linv = u_identity(rows);
  res.R = u_identity(cols);
  res.Rinv = u_identity(cols);
  for (auto &row : m)
    for (auto &e : row) e = u_normalize(std::move(e), F);

  auto row_swap = [&](size_t i, size_t j) {
    std::swap(m[i], m[j]);
    std::swap(res.L[i], res.L[j]);
    for (size_t c = 0; c < rows; ++c) std::swap(res.Linv[c][i], res.Linv[c][j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(m[r][i], m[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(res.R[r][i], res.R[r][j]);
    std::swap(res.Rinv[i], res.Rinv[j]);
  };
  // row i -= q * row k, with the inverse op applied to Linv columns.
  auto row_axpy = [&](size_t i, size_t k, const UPoly &q) {
    if (q.is_zero()) return;
    for (size_t c = 0; c < cols; ++c)
      m[i][c] = u_sub(m[i][c], u_mul(q, m[k][c], F), F);
    for (size_t c = 0; c < rows; ++c)
      res.L[i][c] = u_sub(res.L[i][c], u_mul(q, res.L[k][c], F), F);
    for (size_t r = 0; r < rows; ++r)
      res.Linv[r][k] = u_add(res.Linv[r][k], u_mul(q, res.Linv[r][i], F), F);
  };
  auto col_axpy = [&](size_t j, size_t k, const UPoly &q) {
    if (q.is_zero()) return;
    for (size_t r = 0; r < rows; ++r)
      m[r][j] = u_sub(m[r][j], u_mul(q, m[r][k], F), F);
    for (size_t r = 0; r < cols; ++r)
      res.R[r][j] = u_sub(res.R[r][j], u_mul(q, res.R[r][k], F), F);
    for (size_t c = 0; c < cols; ++c)
      res.Rinv[k][c] = u_add(res.Rinv[k][c], u_mul(q, res.Rinv[j][c], F), F);
  };

  size_t n = std::min(rows, cols);
  for (size_t k = 0; k < n; ++k) {
    for (;;) {
      // Minimal-degree nonzero pivot.
      long pi = -1, pj = -1;
      int best = -1;
      for (size_t i = k; i < rows; ++i)
        for (size_t j = k; j < cols; ++j)
          if (!m[i][j].is_zero() &&
              (best < 0 || m[i][j].degree() < best)) {
            best = m[i][j].degree();
            pi = static_cast<long>(i);
            pj = static_cast<long>(j);
          }
      if (pi < 0) goto done;
      if (static_cast<size_t>(pi) != k) row_swap(k, pi);
      if (static_cast<size_t>(pj) != k) col_swap(k, pj);

      bool dirty = false;
      for (size_t i = k + 1; i < rows; ++i) {
        if (m[i][k].is_zero()) continue;
        UPoly q, r;
        u_divmod(m[i][k], m[k][k], q, r, F);
        row_axpy(i, k, q);
        if (!m[i][k].is_zero()) dirty = true;
      }
      for (size_t j = k + 1; j < cols; ++j) {
        if (m[k][j].is_zero()) continue;
        UPoly q, r;
        u_divmod(m[k][j], m[k][k], q, r, F);
        col_axpy(j, k, q);
        if (!m[k][j].is_zero()) dirty = true;
      }
      if (dirty) continue;

      bool fixed = true;
      for (size_t i = k + 1; i < rows && fixed; ++i)
        for (size_t j = k + 1; j < cols && fixed; ++j)
          if (!u_divides(m[k][k], m[i][j], F)) {
            // Fold row i into row k to force the divisor chain.
            UPoly minus_one = UPoly::constant(F.norm(Rat(-1)));
            row_axpy(k, i, minus_one);
            fixed = false;
          }
      if (fixed) break;
    }
  }
done:
  res.diag.resize(n);
  for (size_t k = 0; k < n; ++k) res.diag[k] = m[k][k];
  return res;
}

} // namespace kc
