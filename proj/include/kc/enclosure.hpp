#pragma once
#include "kc/poly.hpp"

#include <optional>

namespace kc {

// Closed rational interval.  All certified numeric work in the toolkit is
// done with these; there is no floating point anywhere on an exact path.
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat &x) const { return lo <= x && x <= hi; }
  bool strictly_positive() const { return lo > 0; }
  bool strictly_negative() const { return hi < 0; }
};

RatInterval operator+(const RatInterval &a, const RatInterval &b);
RatInterval operator-(const RatInterval &a, const RatInterval &b);
RatInterval operator*(const RatInterval &a, const RatInterval &b);
RatInterval operator*(const Rat &s, const RatInterval &a);

// Enclosure of pi with width <= 2^-prec (Machin's formula).
RatInterval pi_enclosure(int prec);

// Enclosures of sin(pi q) and cos(pi q) for rational q, width <= 2^-prec.
RatInterval sin_pi(const Rat &q, int prec);
RatInterval cos_pi(const Rat &q, int prec);

// tan(pi q) for q in (0, 1/2).  Empty when the precision was insufficient to
// separate cos from zero; callers retry with doubled prec.
std::optional<RatInterval> tan_pi(const Rat &q, int prec);

// The circle fraction f in (0, 1/2) with 2 cos(2 pi f) = z, for z certified
// inside (-2, 2); result width <= 2^-prec.  Empty when z is too wide to pin
// f down that far; callers re-isolate z more tightly and retry.  Used to
// place non-cyclotomic unit-circle roots of Alexander polynomials.
std::optional<RatInterval> fraction_from_two_cos(const RatInterval &z, int prec);

} // namespace kc
