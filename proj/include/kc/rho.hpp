#pragma once
#include "kc/seifert.hpp"

namespace kc {

// Value of an abelian rho-invariant: always carries a certified enclosing
// interval; the exact rational is present whenever the value is computed in
// closed form (finite sums always, the integral when every jump fraction is
// rational).
struct RhoValue {
  enum class Kind { finite_sum, integral } kind = Kind::finite_sum;
  std::optional<Rat> exact;
  RatInterval interval;
  bool all_regular = true; // no summand / no endpoint sat on a jump
};

// sum_{r=0}^{d-1} sigma_K(e^{2 pi i r/d}); an exact (even-summand) integer.
RhoValue rho_finite(const SeifertMatrix &k, long d);
RhoValue rho_finite(const SignatureEngine &eng, long d);

// Integral of sigma_K over the circle normalized to total measure 1.
RhoValue rho_integral(const SeifertMatrix &k, int prec = 48);

// Universal bound for zero-surgery on a knot: 69713280 * crossing number.
Int cheeger_gromov_bound(long crossing_number);

} // namespace kc
