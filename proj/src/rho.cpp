#include "kc/rho.hpp"

#include <cassert>
#include <stdexcept>

namespace kc {

RhoValue rho_finite(const SignatureEngine &eng, long d) {
  if (d < 1) throw std::invalid_argument("rho_finite needs d >= 1");
  RhoValue v;
  v.kind = RhoValue::Kind::finite_sum;
  long sum = 0;
  bool regular = true;
  // r = 0 contributes 0; r and d-r agree by conjugation.
  for (long r = 1; 2 * r < d; ++r) {
    LtResult s = eng.at({d, r});
    sum += 2 * s.value;
    regular = regular && s.regular;
  }
  if (d % 2 == 0 && d > 1) {
    LtResult s = eng.at({d, d / 2});
    sum += s.value;
    regular = regular && s.regular;
  }
  v.exact = Rat(sum);
  v.interval = {Rat(sum), Rat(sum)};
  v.all_regular = regular;
  return v;
}

RhoValue rho_finite(const SeifertMatrix &k, long d) {
  SignatureEngine eng(k);
  return rho_finite(eng, d);
}

RhoValue rho_integral(const SeifertMatrix &k, int prec) {
  RhoValue v;
  v.kind = RhoValue::Kind::integral;
  Rat target = Rat(1) / Rat(Int(1) << prec);
  for (int effort = prec + 8;; effort *= 2) {
    CircleProfile prof = lt_profile(k, effort);
    if (prof.jumps.empty()) {
      v.exact = Rat(0);
      v.interval = {Rat(0), Rat(0)};
      return v;
    }
    // Sum sigma * arc length over consecutive jumps, plus the wrap-around
    // arc through omega = 1 (whose value is sigma_at_one).
    RatInterval total{Rat(0), Rat(0)};
    size_t n = prof.jumps.size();
    for (size_t i = 0; i + 1 < n; ++i) {
      RatInterval len = {
          prof.jumps[i + 1].enclosure.lo - prof.jumps[i].enclosure.hi,
          prof.jumps[i + 1].enclosure.hi - prof.jumps[i].enclosure.lo};
      total = total + Rat(prof.sigma[i]) * len;
    }
    RatInterval wrap = {
        prof.jumps.front().enclosure.lo + 1 - prof.jumps.back().enclosure.hi,
        prof.jumps.front().enclosure.hi + 1 - prof.jumps.back().enclosure.lo};
    total = total + Rat(prof.sigma_at_one) * wrap;
    if (prof.all_rational) {
      assert(total.lo == total.hi);
      v.exact = total.lo;
      v.interval = total;
      return v;
    }
    if (total.width() <= target || effort > (1 << 22)) {
      v.interval = total;
      return v;
    }
  }
}

Int cheeger_gromov_bound(long crossing_number) {
  if (crossing_number < 0)
    throw std::invalid_argument("crossing number must be nonnegative");
  return Int(69713280) * crossing_number;
}

} // namespace kc
