#include "kc/enclosure.hpp"

#include <cassert>
#include <stdexcept>

namespace kc {

RatInterval operator+(const RatInterval &a, const RatInterval &b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval &a, const RatInterval &b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval &a, const RatInterval &b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  Rat lo = std::min(std::min(p1, p2), std::min(p3, p4));
  Rat hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return {lo, hi};
}

RatInterval operator*(const Rat &s, const RatInterval &a) {
  return s >= 0 ? RatInterval{s * a.lo, s * a.hi}
                : RatInterval{s * a.hi, s * a.lo};
}

namespace {

Rat pow2_neg(int prec) {
  Rat r(1);
  r /= Rat(Int(1) << prec);
  return r;
}

// Alternating Leibniz series for atan(1/n), bracketed by partial sums.
RatInterval atan_inv(long n, const Rat &eps) {
  Rat x = Rat(1) / Rat(n);
  Rat x2 = x * x;
  Rat term = x, sum(0);
  int sign = 1;
  long k = 1;
  while (true) {
    Rat add = term / Rat(k);
    sum += sign > 0 ? add : -add;
    term *= x2;
    k += 2;
    sign = -sign;
    Rat next = term / Rat(k);
    if (next < eps) {
      if (sign > 0) return {sum, sum + next};
      return {sum - next, sum};
    }
  }
}

// sin at a rational point m in [0, 2], width <= eps.
RatInterval sin_taylor(const Rat &m, const Rat &eps) {
  Rat m2 = m * m;
  Rat term = m, sum(0);
  int sign = 1;
  long k = 1;
  while (true) {
    sum += sign > 0 ? term : -term;
    term = term * m2 / Rat((k + 1) * (k + 2));
    k += 2;
    sign = -sign;
    if (term < eps) return {sum - term, sum + term};
  }
}

Rat reduce_mod2(Rat q) {
  // q - 2*floor(q/2), exact.
  Rat h = q / 2;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return q - Rat(2) * Rat(fl);
}

// sin(pi q) on reduced q in [0, 1/2]: evaluate Taylor at the rational
// midpoint of the enclosure of pi*q and pad by the slope bound |sin'| <= 1.
RatInterval sin_pi_reduced(const Rat &q, int prec) {
  assert(q >= 0 && 2 * q <= 1);
  Rat eps = pow2_neg(prec + 2);
  RatInterval x = q * pi_enclosure(prec + 2);
  Rat m = x.mid(), half = x.width() / 2;
  RatInterval s = sin_taylor(m, eps);
  return {s.lo - half, s.hi + half};
}

} // namespace

RatInterval pi_enclosure(int prec) {
  Rat eps = pow2_neg(prec + 6);
  RatInterval a = atan_inv(5, eps), b = atan_inv(239, eps);
  return Rat(16) * a - Rat(4) * b;
}

RatInterval sin_pi(const Rat &q, int prec) {
  Rat r = reduce_mod2(q);
  // Quadrant symmetries down to [0, 1/2].
  bool neg = false;
  if (r >= 1) {
    r -= 1;
    neg = true;
  }
  if (2 * r > 1) r = 1 - r;
  RatInterval s = sin_pi_reduced(r, prec);
  return neg ? RatInterval{-s.hi, -s.lo} : s;
}

RatInterval cos_pi(const Rat &q, int prec) {
  // cos(pi q) = sin(pi (1/2 - q)); reuse the sine path.
  return sin_pi(Rat(1, 2) - q, prec);
}

std::optional<RatInterval> tan_pi(const Rat &q, int prec) {
  if (!(q > 0 && 2 * q < 1))
    throw std::invalid_argument("tan_pi requires q in (0, 1/2)");
  RatInterval s = sin_pi(q, prec);
  RatInterval c = cos_pi(q, prec);
  if (!(c.lo > 0) || !(s.lo > 0)) return std::nullopt;
  return RatInterval{s.lo / c.hi, s.hi / c.lo};
}

std::optional<RatInterval> fraction_from_two_cos(const RatInterval &z,
                                                 int prec) {
  if (!(z.lo > -2 && z.hi < 2))
    throw std::invalid_argument("fraction_from_two_cos needs z inside (-2, 2)");
  Rat target = pow2_neg(prec);
  Rat flo(0), fhi(1, 2);
  int p = prec + 4;
  while (fhi - flo > target) {
    Rat mid = (flo + fhi) / 2;
    // 2 cos(2 pi f) is strictly decreasing in f on (0, 1/2).
    RatInterval c = Rat(2) * cos_pi(2 * mid, p);
    if (c.lo > z.hi) {
      flo = mid;
    } else if (c.hi < z.lo) {
      fhi = mid;
    } else if (c.width() > z.width()) {
      p *= 2;
    } else {
      // The ambiguity now comes from z itself; the caller must tighten it.
      return std::nullopt;
    }
  }
  return RatInterval{flo, fhi};
}

} // namespace kc
