#include "kc/poly.hpp"

#include <cassert>
#include <map>
#include <mutex>
#include <stdexcept>

namespace kc {

RatPoly RatPoly::monomial(Rat v, int deg) {
  RatPoly p;
  if (v == 0) return p;
  p.c.assign(deg + 1, Rat(0));
  p.c[deg] = std::move(v);
  return p;
}

void RatPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

RatPoly operator+(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

RatPoly operator-(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
  r.trim();
  return r;
}

RatPoly operator-(const RatPoly &a) {
  RatPoly r = a;
  for (auto &x : r.c) x = -x;
  return r;
}

RatPoly operator*(const RatPoly &a, const RatPoly &b) {
  RatPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

RatPoly operator*(const RatPoly &a, const Rat &s) {
  RatPoly r;
  if (s == 0) return r;
  r = a;
  for (auto &x : r.c) x *= s;
  return r;
}

Rat eval(const RatPoly &p, const Rat &x) {
  Rat v(0);
  for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) v = v * x + *it;
  return v;
}

RatPoly derivative(const RatPoly &p) {
  RatPoly r;
  if (p.c.size() <= 1) return r;
  r.c.resize(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) r.c[i - 1] = p.c[i] * Rat(static_cast<long>(i));
  r.trim();
  return r;
}

void divmod(const RatPoly &a, const RatPoly &b, RatPoly &q, RatPoly &r) {
  if (b.is_zero()) throw std::invalid_argument("poly division by zero");
  q = RatPoly();
  r = a;
  int db = b.degree();
  Rat inv = 1 / b.lead();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.lead() * inv;
    if (q.c.size() < static_cast<size_t>(k + 1)) q.c.resize(k + 1, Rat(0));
    q.c[k] += f;
    for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
    r.trim();
  }
  q.trim();
}

bool divides(const RatPoly &d, const RatPoly &a) {
  if (a.is_zero()) return true;
  if (d.is_zero()) return false;
  RatPoly q, r;
  divmod(a, d, q, r);
  return r.is_zero();
}

RatPoly exact_div(const RatPoly &a, const RatPoly &b) {
  RatPoly q, r;
  divmod(a, b, q, r);
  assert(r.is_zero());
  return q;
}

RatPoly make_monic(RatPoly p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / p.lead();
  for (auto &x : p.c) x *= inv;
  return p;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a));
}

RatPoly squarefree_part(const RatPoly &p) {
  if (p.degree() <= 0) return p;
  RatPoly g = poly_gcd(p, derivative(p));
  if (g.degree() <= 0) return p;
  return exact_div(p, g);
}

namespace {

int sign_of(const Rat &v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

std::vector<RatPoly> sturm_chain(const RatPoly &p) {
  std::vector<RatPoly> ch;
  ch.push_back(p);
  ch.push_back(derivative(p));
  while (!ch.back().is_zero() && ch.back().degree() >= 0) {
    const RatPoly &a = ch[ch.size() - 2];
    const RatPoly &b = ch.back();
    if (b.is_zero()) break;
    RatPoly q, r;
    divmod(a, b, q, r);
    if (r.is_zero()) break;
    ch.push_back(-r);
  }
  return ch;
}

int sign_changes_at(const std::vector<RatPoly> &ch, const Rat &x) {
  int changes = 0, prev = 0;
  for (const auto &p : ch) {
    int s = sign_of(eval(p, x));
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

int sign_changes_at_inf(const std::vector<RatPoly> &ch, int dir) {
  int changes = 0, prev = 0;
  for (const auto &p : ch) {
    if (p.is_zero()) continue;
    int s = sign_of(p.lead());
    if (dir < 0 && (p.degree() % 2) == 1) s = -s;
    if (s != 0) {
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
  }
  return changes;
}

} // namespace

int sturm_count(const RatPoly &p, const Rat &lo, const Rat &hi) {
  if (p.degree() <= 0) return 0;
  auto ch = sturm_chain(p);
  return sign_changes_at(ch, lo) - sign_changes_at(ch, hi);
}

int sturm_count_all(const RatPoly &p) {
  if (p.degree() <= 0) return 0;
  auto ch = sturm_chain(p);
  return sign_changes_at_inf(ch, -1) - sign_changes_at_inf(ch, +1);
}

namespace {

const RatPoly &cyclotomic_locked(int d, std::map<int, RatPoly> &cache) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by all lower-order cyclotomics of divisors of d.
  RatPoly num = RatPoly::monomial(Rat(1), d) - RatPoly(Rat(1));
  for (int e = 1; e < d; ++e)
    if (d % e == 0) num = exact_div(num, cyclotomic_locked(e, cache));
  return cache.emplace(d, std::move(num)).first->second;
}

} // namespace

const RatPoly &cyclotomic(int d) {
  static std::mutex mu;
  static std::map<int, RatPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(d, cache);
}

RatPoly symmetric_to_z(const RatPoly &p_shifted) {
  // p_shifted has degree 2h with palindromic coefficients; write
  // p(t) t^{-h} = a_0 + sum a_k (t^k + t^{-k}) and expand t^k + t^{-k}
  // through the recurrence c_0 = 2, c_1 = z, c_{k+1} = z c_k - c_{k-1}.
  int deg = p_shifted.degree();
  if (deg < 0) return RatPoly();
  assert(deg % 2 == 0);
  int h = deg / 2;
  for (int k = 0; k <= deg; ++k)
    assert(p_shifted.coeff(k) == p_shifted.coeff(deg - k));
  std::vector<RatPoly> cheb(h + 1);
  cheb[0] = RatPoly(Rat(2));
  if (h >= 1) cheb[1] = RatPoly::monomial(Rat(1), 1);
  for (int k = 2; k <= h; ++k)
    cheb[k] = RatPoly::monomial(Rat(1), 1) * cheb[k - 1] - cheb[k - 2];
  RatPoly q(p_shifted.coeff(h));
  for (int k = 1; k <= h; ++k) q = q + cheb[k] * p_shifted.coeff(h + k);
  return q;
}

namespace {

// Simplest rational in the open interval (lo, hi) for 0 <= lo < hi, by the
// continued-fraction (Stern-Brocot) descent.
Rat simplest_nonneg(const Rat &lo, const Rat &hi) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rat f(fl);
  if (f + 1 < hi) return f + 1;
  Rat a = lo - f, b = hi - f; // 0 <= a < b <= 1
  if (a == 0) {
    // fractional part in (0, b): take 1/(floor(1/b) + 1)
    Rat inv = 1 / b;
    Int g;
    mpz_fdiv_q(g.get_mpz_t(), inv.get_num_mpz_t(), inv.get_den_mpz_t());
    return f + 1 / Rat(g + 1);
  }
  return f + 1 / simplest_nonneg(1 / b, 1 / a);
}

} // namespace

Rat simplest_rational_in(const Rat &lo, const Rat &hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  if (lo < 0 && hi > 0) return Rat(0);
  if (hi <= 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

bool is_prime_int(long p) {
  if (p < 2) return false;
  for (long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

} // namespace kc
