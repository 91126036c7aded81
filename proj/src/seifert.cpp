#include "kc/seifert.hpp"

#include "kc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace kc {

namespace {

// Fraction-free determinant with univariate rational-polynomial entries.
RatPoly ratpoly_det(std::vector<std::vector<RatPoly>> m) {
  long n = static_cast<long>(m.size());
  if (n == 0) return RatPoly(Rat(1));
  RatPoly prev(Rat(1));
  int sign = 1;
  for (long k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          piv = i;
          break;
        }
      if (piv < 0) return RatPoly();
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        RatPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? num : exact_div(num, prev);
      }
    prev = m[k][k];
  }
  RatPoly d = m[n - 1][n - 1];
  return sign > 0 ? d : -d;
}

// det(A - t A^T) as a polynomial in t.
RatPoly seifert_det_poly(const IntMatrix &A) {
  long n = A.rows;
  std::vector<std::vector<RatPoly>> m(n, std::vector<RatPoly>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      RatPoly e(Rat(A.at(i, j)));
      e = e - RatPoly::monomial(Rat(A.at(j, i)), 1);
      m[i][j] = e;
    }
  return ratpoly_det(std::move(m));
}

Rat cauchy_root_bound(const RatPoly &p) {
  if (p.degree() <= 0) return Rat(1);
  Rat lead = abs(p.lead());
  Rat mx(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat a = abs(p.coeff(i));
    if (a > mx) mx = a;
  }
  return 1 + mx / lead;
}

} // namespace

SeifertMatrix SeifertMatrix::from_matrix(IntMatrix A,
                                         std::optional<std::string> name,
                                         std::optional<long> crossing_number) {
  if (A.rows != A.cols)
    throw InvalidSeifertMatrix("matrix must be square");
  if (A.rows % 2 != 0)
    throw InvalidSeifertMatrix("size must be even (2g)");
  if (det(A - A.transpose()) != 1)
    throw InvalidSeifertMatrix("det(A - A^T) must be 1");
  SeifertMatrix k;
  k.A_ = std::move(A);
  k.name_ = std::move(name);
  k.crossing_number_ = crossing_number;
  return k;
}

SeifertMatrix unknot() {
  return SeifertMatrix::from_matrix(IntMatrix(0, 0), "unknot", 0);
}

namespace {

SeifertMatrix make2(long a, long b, long c, long d, std::string name,
                    std::optional<long> crossings) {
  IntMatrix m(2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return SeifertMatrix::from_matrix(std::move(m), std::move(name), crossings);
}

} // namespace

SeifertMatrix trefoil() { return make2(-1, 1, 0, -1, "trefoil", 3); }
SeifertMatrix figure_eight() { return make2(1, 1, 0, -1, "figure_eight", 4); }

SeifertMatrix torus_knot_2(long odd_n) {
  if (odd_n < 3 || odd_n % 2 == 0)
    throw std::invalid_argument("torus_knot_2 needs odd n >= 3");
  long g = (odd_n - 1) / 2;
  IntMatrix m(2 * g, 2 * g);
  for (long i = 0; i < 2 * g; ++i) {
    m.at(i, i) = -1;
    if (i + 1 < 2 * g) m.at(i, i + 1) = 1;
  }
  return SeifertMatrix::from_matrix(
      std::move(m), "torus_2_" + std::to_string(odd_n), odd_n);
}

SeifertMatrix twist_knot(long n) {
  // n full twists in one band; n = -1 is the trefoil, n = 1 the figure-eight.
  return make2(-1, 1, 0, n, "twist_" + std::to_string(n), std::nullopt);
}

SeifertMatrix mirror(const SeifertMatrix &k) {
  IntMatrix m = -(k.matrix().transpose());
  std::optional<std::string> nm;
  if (k.name()) {
    const std::string &s = *k.name();
    nm = s.rfind("mirror_", 0) == 0 ? s.substr(7) : "mirror_" + s;
  }
  return SeifertMatrix::from_matrix(std::move(m), nm, k.crossing_number());
}

SeifertMatrix concordance_inverse(const SeifertMatrix &k) { return mirror(k); }

SeifertMatrix connected_sum(const SeifertMatrix &a, const SeifertMatrix &b) {
  IntMatrix m(a.size() + b.size(), a.size() + b.size());
  for (long i = 0; i < a.size(); ++i)
    for (long j = 0; j < a.size(); ++j) m.at(i, j) = a.matrix().at(i, j);
  for (long i = 0; i < b.size(); ++i)
    for (long j = 0; j < b.size(); ++j)
      m.at(a.size() + i, a.size() + j) = b.matrix().at(i, j);
  std::optional<std::string> nm;
  if (a.name() && b.name()) nm = *a.name() + "#" + *b.name();
  std::optional<long> cr;
  if (a.crossing_number() && b.crossing_number())
    cr = *a.crossing_number() + *b.crossing_number();
  return SeifertMatrix::from_matrix(std::move(m), nm, cr);
}

std::optional<SeifertMatrix> named_knot(const std::string &name) {
  if (name == "unknot") return unknot();
  if (name == "trefoil") return trefoil();
  if (name == "figure_eight") return figure_eight();
  if (name.rfind("torus_2_", 0) == 0)
    return torus_knot_2(std::stol(name.substr(8)));
  if (name.rfind("twist_m", 0) == 0)
    return twist_knot(-std::stol(name.substr(7)));
  if (name.rfind("twist_", 0) == 0)
    return twist_knot(std::stol(name.substr(6)));
  if (name.rfind("mirror_", 0) == 0) {
    auto base = named_knot(name.substr(7));
    if (base) return mirror(*base);
  }
  return std::nullopt;
}

namespace {

// Index classes of the irreducible diagonal blocks of A (union-find over the
// nonzero pattern of A and A^T).
std::vector<std::vector<long>> block_partition(const IntMatrix &A) {
  long n = A.rows;
  std::vector<long> parent(n);
  for (long i = 0; i < n; ++i) parent[i] = i;
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (A.at(i, j) != 0 || A.at(j, i) != 0) parent[find(i)] = find(j);
  std::map<long, std::vector<long>> groups;
  for (long i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<long>> out;
  for (auto &[root, idx] : groups) out.push_back(std::move(idx));
  return out;
}

IntMatrix submatrix(const IntMatrix &A, const std::vector<long> &idx) {
  IntMatrix m(static_cast<long>(idx.size()), static_cast<long>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      m.at(i, j) = A.at(idx[i], idx[j]);
  return m;
}

std::string matrix_key(const IntMatrix &A) {
  std::string s = std::to_string(A.rows) + ":";
  for (const auto &v : A.a) {
    s += v.get_str();
    s += ',';
  }
  return s;
}

RatPoly core_of_single_block(const IntMatrix &A) {
  RatPoly d = seifert_det_poly(A);
  assert(!d.is_zero());
  int low = 0;
  while (d.coeff(low) == 0) ++low;
  RatPoly core;
  core.c.assign(d.c.begin() + low, d.c.end());
  assert(core.degree() % 2 == 0);
  return core;
}

} // namespace

RatPoly alexander_core(const SeifertMatrix &k) {
  // det(A - t A^T) factors over the irreducible diagonal blocks.
  RatPoly core(Rat(1));
  std::map<std::string, RatPoly> seen;
  for (const auto &idx : block_partition(k.matrix())) {
    IntMatrix sub = submatrix(k.matrix(), idx);
    std::string key = matrix_key(sub);
    auto it = seen.find(key);
    if (it == seen.end())
      it = seen.emplace(key, core_of_single_block(sub)).first;
    core = core * it->second;
  }
  for (int i = 0; i <= core.degree(); ++i)
    assert(core.coeff(i) == core.coeff(core.degree() - i));
  assert(eval(core, Rat(1)) == 1);
  return core;
}

LaurentPoly alexander_poly(const SeifertMatrix &k) {
  RatPoly core = alexander_core(k);
  int h = core.degree() / 2;
  LaurentPoly p;
  for (int i = 0; i <= core.degree(); ++i)
    if (core.coeff(i) != 0)
      p = p + LaurentPoly::monomial(core.coeff(i), {"t"}, {i - h});
  return p;
}

long alexander_span(const SeifertMatrix &k) {
  return alexander_core(k).degree();
}

Int alexander_top_coefficient(const SeifertMatrix &k) {
  RatPoly core = alexander_core(k);
  Rat lead = core.lead();
  assert(lead.get_den() == 1);
  return lead.get_num();
}

long signature(const SeifertMatrix &k) {
  long n = k.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      m[i][j] = Rat(k.matrix().at(i, j) + k.matrix().at(j, i));
  return symmetric_inertia(std::move(m)).signature();
}

int arf(const SeifertMatrix &k) {
  RatPoly core = alexander_core(k);
  int h = core.degree() / 2;
  Rat v = eval(core, Rat(-1));
  if (h % 2 == 1) v = -v; // Delta(-1) = (-1)^h core(-1)
  assert(v.get_den() == 1);
  Int n = v.get_num() % 8;
  if (n < 0) n += 8;
  return (n == 1 || n == 7) ? 0 : 1;
}

namespace {

// Exact Levine-Tristram machinery for one irreducible block.
struct BlockEngine {
  long size = 0;
  IntMatrix S, T;
  RatPoly core; // t^h Delta of the block (up to sign; only roots matter)
  RatPoly sing; // squarefree singular locus of the Cayley pencil in t

  explicit BlockEngine(const IntMatrix &A) : size(A.rows) {
    S = A + A.transpose();
    T = A.transpose() - A;
    core = core_of_single_block(A);
    ComplexPoly p = pencil_det(S, T);
    RatPoly g = poly_gcd(p.re, p.im);
    sing = squarefree_part(make_monic(std::move(g)));
  }

  long sample_signature(const Rat &t) const {
    long n = size;
    std::vector<std::vector<Rat>> m(2 * n, std::vector<Rat>(2 * n, Rat(0)));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Rat s = t * Rat(S.at(i, j));
        Rat w = Rat(T.at(i, j));
        m[i][j] = s;
        m[n + i][n + j] = s;
        m[i][n + j] = -w;
        m[n + i][j] = w;
      }
    long sig = symmetric_inertia(std::move(m)).signature();
    assert(sig % 2 == 0);
    return sig / 2;
  }

  // d, r normalized with 0 < r <= d/2.
  LtResult at(long d, long r) const {
    long g = std::gcd(r, d);
    long order = d / g;
    // Phi_order can divide the core only when its degree phi(order) fits;
    // arc samples may carry enormous denominators, so never build the
    // cyclotomic polynomial unless that holds.
    bool regular = true;
    if (order <= 2L * core.degree() * core.degree() + 6) {
      long phi = 0;
      for (long x = 1; x <= order; ++x)
        if (std::gcd(x, order) == 1) ++phi;
      if (phi <= core.degree())
        regular = !divides(cyclotomic(static_cast<int>(order)), core);
    }

    Rat q(r, d); // half-angle fraction in (0, 1/2]
    q.canonicalize();
    if (2 * q == 1) {
      // omega = -1: the pencil parameter runs off to infinity; sample beyond
      // every singular point.  By conjugation symmetry both one-sided limits
      // agree there, so the averaged value is that sample even when singular.
      Rat beyond = cauchy_root_bound(sing) + 1;
      return {sample_signature(beyond), regular};
    }

    for (int prec = 32;; prec *= 2) {
      if (prec > (1 << 24))
        throw std::runtime_error("lt_signature: no progress");
      auto enc = tan_pi(q, prec);
      if (!enc) continue;
      Rat lo = enc->lo, hi = enc->hi;
      if (eval(sing, lo) == 0) continue; // endpoint collision: tighten
      int roots = sturm_count(sing, lo, hi);
      if (regular) {
        if (roots != 0) continue;
        // [lo, hi] is root-free; the simplest interior rational keeps the
        // congruence arithmetic small.
        return {sample_signature(simplest_rational_in(lo, hi)), true};
      }
      if (roots != 1) continue;
      if (eval(sing, hi) == 0) continue;
      // One-sided samples around the unique singular parameter t0 inside.
      Rat qs = simplest_rational_in(lo, hi);
      Rat left, right;
      if (eval(sing, qs) == 0) {
        // t0 = qs is exactly rational; both neighbors are root-free.
        left = simplest_rational_in(lo, qs);
        right = simplest_rational_in(qs, hi);
      } else if (sturm_count(sing, lo, qs) == 1) {
        left = lo;   // t0 in (lo, qs)
        right = qs;
      } else {
        left = qs;   // t0 in (qs, hi)
        right = hi;
      }
      return {(sample_signature(left) + sample_signature(right)) / 2, false};
    }
  }
};

} // namespace

struct SignatureEngine::Impl {
  long size = 0;
  RatPoly core;
  std::vector<std::pair<std::shared_ptr<const BlockEngine>, long>> blocks;
  mutable std::mutex cache_mu;
  mutable std::map<std::pair<long, long>, LtResult> cache;
};

SignatureEngine::SignatureEngine(const SeifertMatrix &k)
    : impl_(std::make_unique<Impl>()) {
  impl_->size = k.size();
  impl_->core = RatPoly(Rat(1));
  std::map<std::string, std::shared_ptr<const BlockEngine>> seen;
  std::map<std::string, long> mult;
  for (const auto &idx : block_partition(k.matrix())) {
    IntMatrix sub = submatrix(k.matrix(), idx);
    std::string key = matrix_key(sub);
    if (!seen.count(key))
      seen.emplace(key, std::make_shared<BlockEngine>(sub));
    ++mult[key];
  }
  for (const auto &[key, eng] : seen) {
    impl_->blocks.push_back({eng, mult[key]});
    for (long i = 0; i < mult[key]; ++i) impl_->core = impl_->core * eng->core;
  }
}

SignatureEngine::~SignatureEngine() = default;
SignatureEngine::SignatureEngine(SignatureEngine &&) noexcept = default;
SignatureEngine &SignatureEngine::operator=(SignatureEngine &&) noexcept =
    default;

const RatPoly &SignatureEngine::core() const { return impl_->core; }

LtResult SignatureEngine::at(const RootOfUnity &omega) const {
  if (omega.d < 1) throw std::invalid_argument("root of unity needs d >= 1");
  long d = omega.d;
  long r = ((omega.r % d) + d) % d;
  if (r == 0 || impl_->size == 0) return {0, true};
  if (2 * r > d) r = d - r; // sigma(conj omega) = sigma(omega)

  {
    std::lock_guard<std::mutex> lock(impl_->cache_mu);
    auto it = impl_->cache.find({d, r});
    if (it != impl_->cache.end()) return it->second;
  }
  LtResult total{0, true};
  for (const auto &[eng, m] : impl_->blocks) {
    LtResult b = eng->at(d, r);
    total.value += m * b.value;
    total.regular = total.regular && b.regular;
  }
  std::lock_guard<std::mutex> lock(impl_->cache_mu);
  impl_->cache.emplace(std::make_pair(d, r), total);
  return total;
}

long SignatureEngine::at_fraction(const Rat &frac) const {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), frac.get_num_mpz_t(), frac.get_den_mpz_t());
  Rat f = frac - Rat(fl);
  if (f == 0) return 0;
  Int den = f.get_den(), num = f.get_num();
  if (!den.fits_slong_p())
    throw std::invalid_argument("at_fraction denominator too large");
  LtResult res = at({den.get_si(), num.get_si()});
  if (!res.regular)
    throw std::invalid_argument("at_fraction sampled a jump point");
  return res.value;
}

LtResult lt_signature(const SeifertMatrix &k, const RootOfUnity &omega) {
  return SignatureEngine(k).at(omega);
}

namespace {

struct IrrationalJump {
  RatInterval z;    // isolating interval for the root of the z-polynomial
  RatPoly zpoly;    // squarefree polynomial vanishing there
  RatInterval frac; // current enclosure of the circle fraction in (0, 1/2)

  void refine_z() {
    Rat mid = z.mid();
    // Split points must avoid the finitely many roots so the half-open
    // Sturm counts stay unambiguous.
    while (eval(zpoly, mid) == 0) mid = (z.lo + mid) / 2;
    if (sturm_count(zpoly, z.lo, mid) == 1)
      z.hi = mid;
    else
      z.lo = mid;
  }
};

} // namespace

CircleProfile lt_profile(const SeifertMatrix &k, int prec) {
  CircleProfile prof;
  SignatureEngine eng(k);
  RatPoly work = eng.core();
  if (work.degree() <= 0) {
    prof.sigma_at_one = 0;
    return prof;
  }

  // Cyclotomic factors give jumps at exact fractions.  phi(e) >= sqrt(e/2),
  // so orders beyond 2*deg^2 cannot divide.
  std::vector<long> orders;
  const int degree = work.degree();
  for (long e = 2; e <= 2L * degree * degree + 6; ++e) {
    long phi = 0;
    for (long x = 1; x <= e; ++x)
      if (std::gcd(x, e) == 1) ++phi;
    if (phi > work.degree()) continue;
    const RatPoly &cy = cyclotomic(static_cast<int>(e));
    bool any = false;
    while (work.degree() >= cy.degree() && divides(cy, work)) {
      work = exact_div(work, cy);
      any = true;
    }
    if (any) orders.push_back(e);
    if (work.degree() == 0) break;
  }

  std::vector<JumpPoint> jumps;
  for (long e : orders)
    for (long r = 1; r < e; ++r)
      if (std::gcd(r, e) == 1) {
        JumpPoint j;
        j.rational = true;
        j.fraction = Rat(r, e);
        j.enclosure = {j.fraction, j.fraction};
        j.cyclotomic_order = e;
        jumps.push_back(std::move(j));
      }

  // Non-cyclotomic unit-circle roots via the z = t + 1/t transform.
  std::vector<IrrationalJump> irr;
  if (work.degree() > 0) {
    RatPoly zq = squarefree_part(symmetric_to_z(work));
    int total = sturm_count(zq, Rat(-2), Rat(2));
    // Isolate by repeated bisection of (-2, 2).
    std::vector<RatInterval> stack{{Rat(-2), Rat(2)}}, isolated;
    while (!stack.empty()) {
      RatInterval iv = stack.back();
      stack.pop_back();
      int c = sturm_count(zq, iv.lo, iv.hi);
      if (c == 0) continue;
      if (c == 1 && eval(zq, iv.hi) != 0) {
        isolated.push_back(iv);
        continue;
      }
      Rat mid = iv.mid();
      while (eval(zq, mid) == 0) mid = (iv.lo + 2 * mid) / 3;
      stack.push_back({iv.lo, mid});
      stack.push_back({mid, iv.hi});
    }
    assert(static_cast<int>(isolated.size()) == total);
    (void)total;
    for (auto &iv : isolated) {
      IrrationalJump j{iv, zq, {}};
      // The fraction map needs z strictly inside (-2, 2).
      while (!(j.z.lo > -2 && j.z.hi < 2)) j.refine_z();
      // Tighten until the fraction enclosure is available and within target.
      for (;;) {
        auto f = fraction_from_two_cos(j.z, prec);
        if (f) {
          j.frac = *f;
          break;
        }
        j.refine_z();
      }
      irr.push_back(std::move(j));
    }
  }

  // Refine irrational jumps until all jump positions are pairwise separated.
  auto separated = [&]() {
    std::vector<std::pair<Rat, Rat>> spans;
    for (const auto &j : jumps) spans.push_back({j.fraction, j.fraction});
    for (const auto &j : irr) {
      spans.push_back({j.frac.lo, j.frac.hi});
      spans.push_back({1 - j.frac.hi, 1 - j.frac.lo});
    }
    std::sort(spans.begin(), spans.end());
    for (size_t i = 1; i < spans.size(); ++i)
      if (!(spans[i - 1].second < spans[i].first)) return false;
    return true;
  };
  int effort = prec;
  while (!separated()) {
    effort *= 2;
    if (effort > (1 << 22))
      throw std::runtime_error("lt_profile: jump separation failed");
    for (auto &j : irr) {
      j.refine_z();
      for (;;) {
        auto f = fraction_from_two_cos(j.z, effort);
        if (f) {
          j.frac = *f;
          break;
        }
        j.refine_z();
      }
    }
  }

  for (const auto &j : irr) {
    JumpPoint a;
    a.rational = false;
    a.enclosure = j.frac;
    jumps.push_back(a);
    JumpPoint b;
    b.rational = false;
    b.enclosure = {1 - j.frac.hi, 1 - j.frac.lo};
    jumps.push_back(b);
    prof.all_rational = false;
  }
  std::sort(jumps.begin(), jumps.end(),
            [](const JumpPoint &x, const JumpPoint &y) {
              return x.enclosure.lo < y.enclosure.lo;
            });

  // Sample each arc strictly between consecutive jump enclosures.
  prof.jumps = std::move(jumps);
  size_t n = prof.jumps.size();
  prof.sigma.resize(n, 0);
  for (size_t i = 0; i < n; ++i) {
    Rat hi_here = prof.jumps[i].enclosure.hi;
    Rat lo_next =
        (i + 1 < n) ? prof.jumps[i + 1].enclosure.lo : Rat(1);
    assert(hi_here < lo_next);
    prof.sigma[i] = eng.at_fraction(simplest_rational_in(hi_here, lo_next));
  }
  // The arc through omega = 1 runs from the last jump to the first.
  Rat lo_first = prof.jumps.front().enclosure.lo;
  prof.sigma_at_one = eng.at_fraction(simplest_rational_in(Rat(0), lo_first));
  return prof;
}

} // namespace kc
