#include "oracle.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kc::oracle {

namespace {

// Characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier over the
// integers (every division is exact); rational input is cleared first, which
// only rescales the spectrum positively.
RatPoly charpoly_cleared(const std::vector<std::vector<Rat>> &m) {
  long n = static_cast<long>(m.size());
  Int den(1);
  for (const auto &row : m)
    for (const auto &x : row) den = lcm(den, x.get_den());
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat v = m[i][j] * Rat(den);
      a[i][j] = v.get_num();
    }
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  std::vector<std::vector<Int>> Mk(n, std::vector<Int>(n, Int(0)));
  for (long k = 1; k <= n; ++k) {
    // Mk = a * (Mk + c_{n-k+1} I)
    std::vector<std::vector<Int>> t = Mk;
    for (long i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
    std::vector<std::vector<Int>> nm(n, std::vector<Int>(n, Int(0)));
    for (long i = 0; i < n; ++i)
      for (long l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (long j = 0; j < n; ++j) nm[i][j] += a[i][l] * t[l][j];
      }
    Mk = std::move(nm);
    Int tr(0);
    for (long i = 0; i < n; ++i) tr += Mk[i][i];
    Int ck;
    mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -ck;
  }
  RatPoly p;
  p.c.reserve(n + 1);
  for (const auto &x : c) p.c.push_back(Rat(x));
  p.trim();
  return p;
}

// Sign variations of the coefficient sequence, zeros skipped.  For a
// polynomial with only real roots this counts positive roots with
// multiplicity (Descartes).
long variations(const RatPoly &p) {
  long v = 0;
  int prev = 0;
  for (const Rat &x : p.c) {
    int s = x > 0 ? 1 : (x < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

RatPoly reflect(const RatPoly &p) { // p(-lambda)
  RatPoly r = p;
  for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
  return r;
}

std::vector<std::vector<Rat>> realified_pencil(const IntMatrix &S,
                                               const IntMatrix &T,
                                               const Rat &t) {
  long n = S.rows;
  std::vector<std::vector<Rat>> m(2 * n, std::vector<Rat>(2 * n, Rat(0)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Rat x = t * Rat(S.at(i, j));
      Rat y = Rat(T.at(i, j));
      m[i][j] = x;
      m[n + i][n + j] = x;
      m[i][n + j] = -y;
      m[n + i][j] = y;
    }
  return m;
}

// Determinant of the realified pencil as a polynomial in t, via evaluation
// at 2n+1 rational points and Lagrange interpolation.
RatPoly pencil_det_interpolated(const IntMatrix &S, const IntMatrix &T) {
  long n = 2 * S.rows;
  long npts = n + 1;
  std::vector<Rat> xs, ys;
  for (long j = 0; j < npts; ++j) {
    Rat x(j);
    auto m = realified_pencil(S, T, x);
    // plain fraction Gaussian determinant
    Rat det(1);
    long nn = n;
    for (long k = 0; k < nn; ++k) {
      long piv = -1;
      for (long i = k; i < nn; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        det = 0;
        break;
      }
      if (piv != k) {
        std::swap(m[piv], m[k]);
        det = -det;
      }
      det *= m[k][k];
      Rat inv = 1 / m[k][k];
      for (long i = k + 1; i < nn; ++i) {
        if (m[i][k] == 0) continue;
        Rat f = m[i][k] * inv;
        for (long c = k; c < nn; ++c) m[i][c] -= f * m[k][c];
      }
    }
    xs.push_back(x);
    ys.push_back(det);
  }
  RatPoly acc;
  for (long j = 0; j < npts; ++j) {
    RatPoly term(Rat(1));
    Rat denom(1);
    for (long l = 0; l < npts; ++l) {
      if (l == j) continue;
      RatPoly lin;
      lin.c = {-xs[l], Rat(1)};
      term = term * lin;
      denom *= xs[j] - xs[l];
    }
    acc = acc + term * (ys[j] / denom);
  }
  return acc;
}

} // namespace

long charpoly_signature(const std::vector<std::vector<Rat>> &m) {
  RatPoly chi = charpoly_cleared(m);
  return variations(chi) - variations(reflect(chi));
}

// Sturm chains cached and reused: the oracle is called thousands of times in
// the property suites.
struct Chain {
  std::vector<RatPoly> polys;

  explicit Chain(const RatPoly &p) {
    polys.push_back(p);
    polys.push_back(derivative(p));
    while (!polys.back().is_zero()) {
      const RatPoly &x = polys[polys.size() - 2];
      RatPoly q, rem;
      divmod(x, polys.back(), q, rem);
      if (rem.is_zero()) break;
      polys.push_back(-rem);
    }
  }

  long variations_at(const Rat &x) const {
    long v = 0;
    int prev = 0;
    for (const auto &p : polys) {
      Rat e = eval(p, x);
      int s = e > 0 ? 1 : (e < 0 ? -1 : 0);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  long count(const Rat &lo, const Rat &hi) const {
    return variations_at(lo) - variations_at(hi);
  }
};

struct TanIsolation {
  std::shared_ptr<const Chain> chain; // of the degree-d tangent polynomial
  Rat a, b;                           // (a, b] isolates tan(pi r/d)
};

TanIsolation tan_isolation(long d, long r) {
  static std::map<long, std::pair<std::shared_ptr<const Chain>, Rat>> upolys;
  static std::map<std::pair<long, long>, TanIsolation> cache;
  auto hit = cache.find({d, r});
  if (hit != cache.end()) return hit->second;

  auto uit = upolys.find(d);
  if (uit == upolys.end()) {
    // Roots of Im[(1+it)^d] are tan(pi k/d).
    RatPoly U;
    Int bin(1);
    U.c.assign(d + 1, Rat(0));
    for (long j = 0; j <= d; ++j) {
      if (j % 2 == 1) {
        int sign = ((j - 1) / 2) % 2 == 0 ? 1 : -1;
        U.c[j] = Rat(sign > 0 ? bin : -bin);
      }
      bin = bin * (d - j) / (j + 1);
    }
    U.trim();
    U = squarefree_part(U);
    Rat bound(1);
    Rat lead = abs(U.lead());
    for (int i = 0; i < U.degree(); ++i) {
      Rat x = abs(U.coeff(i)) / lead;
      if (x > bound - 1) bound = x + 1;
    }
    uit = upolys.emplace(d, std::make_pair(std::make_shared<Chain>(U), bound))
              .first;
  }
  const Chain &U = *uit->second.first;
  Rat a(0), b = uit->second.second;
  // Shrink (a, b] until it holds exactly the r-th positive root.
  while (!(U.count(a, b) == 1 && U.count(Rat(0), a) == r - 1)) {
    Rat mid = (a + b) / 2;
    if (U.count(Rat(0), mid) >= r)
      b = mid;
    else
      a = mid;
  }
  TanIsolation iso{uit->second.first, a, b};
  cache.emplace(std::make_pair(d, r), iso);
  return iso;
}

const Chain &detp_chain(const SeifertMatrix &k, const IntMatrix &S,
                        const IntMatrix &T) {
  static std::map<std::string, std::shared_ptr<const Chain>> cache;
  std::string key = std::to_string(k.size()) + ":";
  for (const auto &v : k.matrix().a) {
    key += v.get_str();
    key += ',';
  }
  auto it = cache.find(key);
  if (it == cache.end()) {
    RatPoly detp = squarefree_part(pencil_det_interpolated(S, T));
    it = cache.emplace(key, std::make_shared<Chain>(detp)).first;
  }
  return *it->second;
}

long lt_signature_regular(const SeifertMatrix &k, long d, long r) {
  if (d < 1) throw std::invalid_argument("d >= 1");
  r = ((r % d) + d) % d;
  if (r == 0 || k.size() == 0) return 0;
  if (2 * r > d) r = d - r;
  IntMatrix S = k.matrix() + k.matrix().transpose();
  IntMatrix T = k.matrix().transpose() - k.matrix();

  if (2 * r == d) {
    long n = k.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m[i][j] = Rat(S.at(i, j));
    return charpoly_signature(m);
  }

  TanIsolation iso = tan_isolation(d, r);
  Rat a = iso.a, b = iso.b;
  const Chain &U = *iso.chain;
  const Chain &detp = detp_chain(k, S, T);
  for (int guard = 0; detp.count(a, b) != 0; ++guard) {
    if (guard > 4096)
      throw std::runtime_error("oracle: interval never cleared (singular?)");
    Rat mid = (a + b) / 2;
    if (U.count(a, mid) == 1)
      b = mid;
    else
      a = mid;
  }
  long sig = charpoly_signature(
      realified_pencil(S, T, simplest_rational_in(a, b)));
  assert(sig % 2 == 0);
  return sig / 2;
}

namespace {

void minors_gcd(const IntMatrix &m, long k, Int &g) {
  // gcd of all k x k minors
  std::vector<long> rows(k), cols(k);
  std::vector<long> ridx, cidx;
  std::function<void(long, long)> rec_cols = [&](long start, long depth) {
    if (depth == k) {
      IntMatrix sub(k, k);
      for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) sub.at(i, j) = m.at(ridx[i], cidx[j]);
      g = gcd(g, det(sub));
      return;
    }
    for (long c = start; c < m.cols; ++c) {
      cidx.push_back(c);
      rec_cols(c + 1, depth + 1);
      cidx.pop_back();
    }
  };
  std::function<void(long, long)> rec_rows = [&](long start, long depth) {
    if (depth == k) {
      rec_cols(0, 0);
      return;
    }
    for (long r = start; r < m.rows; ++r) {
      ridx.push_back(r);
      rec_rows(r + 1, depth + 1);
      ridx.pop_back();
    }
  };
  rec_rows(0, 0);
}

} // namespace

bool snf_minor_gcd_check(const IntMatrix &m, const std::vector<Int> &diag) {
  long n = std::min(m.rows, m.cols);
  Int prod(1);
  for (long k = 1; k <= n; ++k) {
    prod *= diag[k - 1];
    Int g(0);
    minors_gcd(m, k, g);
    if (abs(prod) != abs(g)) return false;
    if (g == 0) break; // all larger minors vanish as well
  }
  return true;
}

} // namespace kc::oracle
