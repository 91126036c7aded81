#include "kc/fox.hpp"

#include "kc/errors.hpp"

#include <cassert>

namespace kc {

WordSum ws_add(const WordSum &a, const WordSum &b) {
  WordSum r = a;
  for (const auto &[w, c] : b) {
    auto it = r.find(w);
    if (it == r.end()) {
      r.emplace(w, c);
    } else {
      it->second += c;
      if (it->second == 0) r.erase(it);
    }
  }
  return r;
}

WordSum ws_translate_right_inv(const WordSum &a, const FreeWord &w) {
  FreeWord winv = w.inverse();
  WordSum r;
  for (const auto &[u, c] : a) r.emplace(u * winv, c);
  return r;
}

Int ws_augmentation(const WordSum &a) {
  Int s(0);
  for (const auto &[w, c] : a) s += c;
  return s;
}

WordSum fox_derivative(const FreeWord &w, int i) {
  if (i < 1) throw IndexOutOfRange("generator index must be >= 1");
  // Peeling letters from the left, d_i(x^e v) = d_i(x^e) + d_i(v) x^{-e};
  // the letter at position k therefore contributes its own derivative
  // translated by the inverse of the preceding prefix.
  WordSum r;
  auto add = [&r](const FreeWord &u, int c) {
    auto it = r.find(u);
    if (it == r.end()) {
      r.emplace(u, c);
      return;
    }
    it->second += c;
    if (it->second == 0) r.erase(it);
  };
  FreeWord prefix;
  for (int x : w.letters()) {
    if (std::abs(x) == i) {
      FreeWord tr = prefix.inverse();
      if (x > 0)
        add(tr, 1); // d_i(x_i) = 1
      else
        add(FreeWord::generator(i) * tr, -1); // d_i(x_i^{-1}) = -x_i
    }
    prefix = prefix * FreeWord::generator(std::abs(x), x > 0 ? 1 : -1);
  }
  return r;
}

LaurentPoly project_level1(const WordSum &s, const CoeffSpec &coeff,
                           int rank) {
  int n = rank;
  for (const auto &[w, c] : s) n = std::max(n, w.max_generator());
  std::vector<std::string> vars;
  vars.reserve(n);
  for (int i = 1; i <= n; ++i) vars.push_back("t" + std::to_string(i));
  LaurentPoly r;
  for (const auto &[w, c] : s) {
    auto e = w.exponent_vector(n);
    std::vector<int> ev(e.begin(), e.end());
    r = r + LaurentPoly::monomial(Rat(c), vars, ev);
  }
  if (coeff.is_modp()) r = r.reduce_mod(coeff.p);
  return r;
}

TupleCollection tuples_P(int n, int g, std::optional<long> limit) {
  if (n < 0 || g < 1) throw std::invalid_argument("need n >= 0, g >= 1");
  if (limit && *limit <= 0) throw LimitZero("tuple limit must be positive");
  TupleCollection col;
  col.level = n;
  col.genus = g;
  const int twog = 2 * g;

  // Closed-form count: |P_0| = 1, |P_1| = 2g, |P_{k+1}| = |P_k|(4g-3)^{2g-1}.
  col.full_count = 1;
  if (n >= 1) {
    col.full_count = twog;
    Int step = 1;
    for (int j = 0; j < twog - 1; ++j) step *= 4 * g - 3;
    for (int k = 2; k <= n; ++k) col.full_count *= step;
  }

  auto push = [&](Tuple t) {
    if (limit && static_cast<long>(col.tuples.size()) >= *limit) {
      col.truncated = true;
      return false;
    }
    col.tuples.push_back(std::move(t));
    return true;
  };

  if (n == 0) {
    Tuple t;
    for (int i = 1; i <= twog; ++i) t.exprs.push_back(CommExpr::gen(i));
    for (const auto &e : t.exprs) t.words.push_back(e->word());
    push(std::move(t));
    return col;
  }

  // P_1: for each i, the tuple { [x_i, x_j] : j != i }.
  std::vector<Tuple> level;
  for (int i = 1; i <= twog; ++i) {
    Tuple t;
    for (int j = 1; j <= twog; ++j) {
      if (j == i) continue;
      t.exprs.push_back(CommExpr::comm(CommExpr::gen(i), CommExpr::gen(j)));
    }
    for (const auto &e : t.exprs) t.words.push_back(e->word());
    level.push_back(std::move(t));
  }

  for (int k = 2; k <= n; ++k) {
    // Per-position choices: z_i = [w_i, w_i^{x_j}] for the 2g-1 generators
    // j != i, then z_i = [w_i, w_m] for the 2g-2 positions m != i.
    const int tsize = twog - 1;
    const int nchoices = (twog - 1) + (twog - 2);
    std::vector<Tuple> next;
    bool hit_limit = false;
    for (const auto &base : level) {
      std::vector<int> choice(tsize, 0);
      for (;;) {
        Tuple t;
        t.exprs.reserve(tsize);
        for (int i = 0; i < tsize; ++i) {
          int c = choice[i];
          const auto &wi = base.exprs[i];
          if (c < twog - 1) {
            // j runs over generators, skipping j == i+1.
            int j = c + 1;
            if (j >= i + 1) ++j;
            t.exprs.push_back(
                CommExpr::comm(wi, CommExpr::conj(wi, j)));
          } else {
            int m = c - (twog - 1) + 1;
            if (m >= i + 1) ++m;
            t.exprs.push_back(CommExpr::comm(wi, base.exprs[m - 1]));
          }
        }
        for (const auto &e : t.exprs) t.words.push_back(e->word());
        if (limit &&
            static_cast<long>(next.size()) >= *limit) {
          hit_limit = true;
          break;
        }
        next.push_back(std::move(t));
        // Lexicographic increment.
        int pos = tsize - 1;
        while (pos >= 0 && choice[pos] == nchoices - 1) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
      }
      if (hit_limit) break;
    }
    col.truncated = col.truncated || hit_limit;
    level = std::move(next);
  }

  if (limit && static_cast<long>(level.size()) > *limit) {
    level.resize(*limit);
    col.truncated = true;
  }
  col.tuples = std::move(level);
  return col;
}

IndependenceResult independence_test(const std::vector<FreeWord> &tuple,
                                     const CoeffSpec &coeff,
                                     std::uint64_t seed) {
  long size = static_cast<long>(tuple.size());
  if (size < 1 || size % 2 != 1)
    throw WrongTupleSize("tuple must have 2g-1 entries, got " +
                         std::to_string(size));
  int twog = static_cast<int>(size) + 1;
  for (const auto &w : tuple)
    if (w.max_generator() > twog)
      throw WrongTupleSize("word uses generator beyond rank 2g");

  IndependenceResult res;
  res.matrix.assign(size, std::vector<LaurentPoly>(size));
  for (long i = 0; i < size; ++i)
    for (long j = 0; j < size; ++j)
      res.matrix[i][j] = project_level1(
          fox_derivative(tuple[i], static_cast<int>(j) + 1), coeff, twog);
  res.rank = fraction_rank(res.matrix, coeff, seed);
  res.independent = (res.rank == size);
  return res;
}

WedgeRankResult wedge_rank_check(long m,
                                 const std::vector<std::vector<long>> &images,
                                 const CoeffSpec &coeff, std::uint64_t seed) {
  if (m < 1 || static_cast<long>(images.size()) != m)
    throw std::invalid_argument("need one image vector per circle");
  size_t k = images.empty() ? 0 : images[0].size();
  bool nontrivial = false;
  for (const auto &v : images) {
    if (v.size() != k)
      throw std::invalid_argument("inconsistent target rank");
    for (long x : v) nontrivial = nontrivial || x != 0;
  }
  if (k == 0 || !nontrivial)
    throw TrivialSystem("coefficient system must be nontrivial");

  std::vector<std::string> vars;
  for (size_t i = 1; i <= k; ++i) vars.push_back("t" + std::to_string(i));
  // Boundary of the i-th 1-cell in the twisted chain complex: 1 - g_i^{-1}.
  std::vector<std::vector<LaurentPoly>> row(1);
  for (long i = 0; i < m; ++i) {
    std::vector<int> e(images[i].begin(), images[i].end());
    for (int &x : e) x = -x;
    row[0].push_back(LaurentPoly::constant(Rat(1)) -
                     LaurentPoly::monomial(Rat(1), vars, e));
  }
  WedgeRankResult r;
  r.computed = m - fraction_rank(row, coeff, seed);
  r.expected = m - 1;
  r.matches = (r.computed == r.expected);
  return r;
}

} // namespace kc
